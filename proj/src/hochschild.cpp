#include "quiverworks/hochschild.hpp"

#include <cstddef>
#include <string>
#include <vector>

#include "quiverworks/linalg.hpp"

namespace qw {
namespace {

LinComb unit_term(const Field& f, const Path& p) {
  return LinComb::term(f, Scalar::of(f, 1), p);
}

// Basis index of a path that is certainly a basis element (vertex idempotents
// and, because relations have length >= 2, single arrows).
int required_index(const AlgebraBasis& alg, const Path& p) {
  int i = alg.basis_index(p);
  if (i < 0)
    throw DomainError("Internal", "generator is not a basis path");
  return i;
}

// Coordinates of the commutator [b_i, b_j] = b_i b_j - b_j b_i.
Vec commutator(const AlgebraBasis& alg, int i, int j) {
  Vec v = alg.multiply(i, j);
  Vec w = alg.multiply(j, i);
  for (std::size_t k = 0; k < v.size(); ++k) v[k] = v[k] - w[k];
  return v;
}

// Per-arrow unknown blocks of a normalized derivation: d(a) ranges over
// e_{t(a)} A e_{s(a)}, coordinatized by the pair basis of (src, dst).
struct ArrowBlocks {
  std::vector<int> arrow_index;        // arrow -> its own basis index
  std::vector<std::vector<int>> pair;  // arrow -> basis indices of its block
  std::vector<int> offset;             // arrow -> first unknown
  int total = 0;
};

ArrowBlocks arrow_blocks(const AlgebraBasis& alg) {
  const Quiver& q = alg.quiver();
  ArrowBlocks b;
  for (int a = 0; a < q.num_arrows(); ++a) {
    const Arrow& ar = q.arrow(a);
    b.arrow_index.push_back(required_index(alg, Path{ar.src, {a}}));
    b.pair.push_back(alg.pair_basis(ar.src, ar.dst));
    b.offset.push_back(b.total);
    b.total += static_cast<int>(b.pair.back().size());
  }
  return b;
}

// Leibniz expansion of the relations for arrow values given by `value`, one
// reduced LinComb per relation. The expansion of a path w inserts the value
// at every position: sum over j of (arrows after j) o value(a_j) o (arrows
// before j), all in function order. Values must already lie in their blocks
// e_{t(a)} A e_{s(a)}; then every concatenation below is composable.
std::vector<LinComb> leibniz_values(const AlgebraBasis& alg,
                                    const std::vector<LinComb>& value) {
  const Quiver& q = alg.quiver();
  const Field& f = alg.field();
  std::vector<LinComb> out;
  for (const LinComb& rel : alg.presentation().relations) {
    LinComb acc(f);
    for (const auto& [w, c] : rel.terms()) {
      for (std::size_t j = 0; j < w.arrows.size(); ++j) {
        int a = w.arrows[j];
        if (value[a].is_zero()) continue;
        Path before{w.base, {w.arrows.begin(), w.arrows.begin() + j}};
        Path after{q.arrow(a).dst, {w.arrows.begin() + j + 1, w.arrows.end()}};
        LinComb piece = unit_term(f, after) * value[a] * unit_term(f, before);
        acc = acc + piece.scaled(c);
      }
    }
    out.push_back(alg.normal_form(acc));
  }
  return out;
}

// Arrow values of [b_i, -] for a diagonal basis element, as one flat vector
// of block coordinates (commutators with diagonal elements stay in-block).
Vec commutator_flat(const AlgebraBasis& alg, const ArrowBlocks& blocks, int i) {
  const Field& f = alg.field();
  Vec flat = zero_vec(f, blocks.total);
  for (std::size_t a = 0; a < blocks.pair.size(); ++a) {
    Vec full = commutator(alg, i, blocks.arrow_index[a]);
    for (std::size_t k = 0; k < blocks.pair[a].size(); ++k) {
      flat[blocks.offset[a] + k] = full[blocks.pair[a][k]];
      full[blocks.pair[a][k]] = Scalar::of(f, 0);
    }
    if (!is_zero_vec(full))
      throw DomainError("Internal", "diagonal commutator left its block");
  }
  return flat;
}

std::vector<int> diagonal_indices(const AlgebraBasis& alg) {
  std::vector<int> out;
  for (int i = 0; i < alg.dim(); ++i) {
    const Path& p = alg.basis_path(i);
    if (p.source() == p.target(alg.quiver())) out.push_back(i);
  }
  return out;
}

// Span of the normalized inner derivations, as flattened tuples.
RowReducer inner_span(const AlgebraBasis& alg, const ArrowBlocks& blocks,
                      std::vector<Vec>* reps = nullptr) {
  RowReducer span(alg.field(), blocks.total);
  for (int i : diagonal_indices(alg)) {
    Vec flat = commutator_flat(alg, blocks, i);
    if (span.insert(flat) && reps) reps->push_back(std::move(flat));
  }
  return span;
}

// Reassemble arrow values from flat block coordinates.
std::vector<LinComb> values_of_flat(const AlgebraBasis& alg,
                                    const ArrowBlocks& blocks, const Vec& flat) {
  std::vector<LinComb> vals(blocks.pair.size(), LinComb(alg.field()));
  for (std::size_t a = 0; a < blocks.pair.size(); ++a)
    for (std::size_t k = 0; k < blocks.pair[a].size(); ++k)
      vals[a].add(alg.basis_path(blocks.pair[a][k]), flat[blocks.offset[a] + k]);
  return vals;
}

}  // namespace

int hh0_dim(const AlgebraBasis& alg) {
  const Field& f = alg.field();
  const Quiver& q = alg.quiver();
  const int n = alg.dim();

  std::vector<int> gens;
  for (int v = 0; v < q.num_vertices(); ++v)
    gens.push_back(required_index(alg, Path::lazy(v)));
  for (int a = 0; a < q.num_arrows(); ++a)
    gens.push_back(required_index(alg, Path{q.arrow(a).src, {a}}));

  // z is central iff it commutes with every generator.
  Matrix sys(f, gens.size() * n, n);
  for (int i = 0; i < n; ++i)
    for (std::size_t g = 0; g < gens.size(); ++g) {
      Vec col = commutator(alg, gens[g], i);
      for (int r = 0; r < n; ++r) sys.at(g * n + r, i) = col[r];
    }
  return static_cast<int>(sys.kernel().size());
}

DerivationSpace derivation_space(const AlgebraBasis& alg) {
  const Field& f = alg.field();
  const int n = alg.dim();
  const ArrowBlocks blocks = arrow_blocks(alg);
  const auto& rels = alg.presentation().relations;

  // One Leibniz condition per relation; the column of a unit unknown (one
  // basis path in one arrow block) is the expansion it produces.
  Matrix sys(f, rels.size() * n, blocks.total);
  std::vector<LinComb> value(alg.quiver().num_arrows(), LinComb(f));
  for (std::size_t a = 0; a < blocks.pair.size(); ++a) {
    for (std::size_t k = 0; k < blocks.pair[a].size(); ++k) {
      value[a] = unit_term(f, alg.basis_path(blocks.pair[a][k]));
      std::vector<LinComb> lv = leibniz_values(alg, value);
      for (std::size_t r = 0; r < lv.size(); ++r) {
        Vec col = alg.coords(lv[r]);
        for (int i = 0; i < n; ++i)
          sys.at(r * n + i, blocks.offset[a] + k) = col[i];
      }
      value[a] = LinComb(f);
    }
  }

  DerivationSpace out;
  out.hh0 = hh0_dim(alg);
  out.diagonal = static_cast<int>(diagonal_indices(alg).size());

  for (const Vec& c : sys.kernel())
    out.basis.push_back(values_of_flat(alg, blocks, c));

  std::vector<Vec> inner_flat;
  RowReducer span = inner_span(alg, blocks, &inner_flat);
  for (const Vec& flat : inner_flat)
    out.inner_basis.push_back(values_of_flat(alg, blocks, flat));

  out.nder = static_cast<int>(out.basis.size());
  out.ninner = static_cast<int>(span.rank());
  if (out.ninner != out.diagonal - out.hh0)
    throw DomainError("Internal",
                      "inner-derivation rank disagrees with diag(A) - HH0");
  out.der = out.nder + n - out.diagonal;
  out.inner = n - out.hh0;
  out.hh1 = out.nder - out.ninner;
  return out;
}

Hh1Dims hh1_dim(const AlgebraBasis& alg) {
  DerivationSpace d = derivation_space(alg);
  return Hh1Dims{d.der, d.inner, d.hh1};
}

DerivationCheck verify_derivation(const AlgebraBasis& alg,
                                  const std::map<std::string, LinComb>& values) {
  const Quiver& q = alg.quiver();
  const Field& f = alg.field();
  std::vector<LinComb> value(q.num_arrows(), LinComb(f));
  for (const auto& [name, v] : values)
    value[q.arrow_id(name)] = alg.normal_form(v);

  // Block membership first: it is what makes the Leibniz products sound.
  const ArrowBlocks blocks = arrow_blocks(alg);
  Vec flat = zero_vec(f, blocks.total);
  for (std::size_t a = 0; a < value.size(); ++a) {
    Vec full = alg.coords(value[a]);
    for (std::size_t k = 0; k < blocks.pair[a].size(); ++k) {
      flat[blocks.offset[a] + k] = full[blocks.pair[a][k]];
      full[blocks.pair[a][k]] = Scalar::of(f, 0);
    }
    if (!is_zero_vec(full))
      throw DomainError("BadDerivationValue",
                        "value on arrow " + q.arrow(a).name +
                            " leaves e_t A e_s");
  }

  DerivationCheck check;
  check.derivation = true;
  for (const LinComb& lv : leibniz_values(alg, value))
    if (!lv.is_zero()) check.derivation = false;
  if (check.derivation) check.inner = inner_span(alg, blocks).contains(flat);
  return check;
}

}  // namespace qw
