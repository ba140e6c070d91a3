#include "quiverworks/fundamental_group.hpp"

#include <algorithm>
#include <cstddef>
#include <cstdlib>
#include <queue>
#include <set>
#include <utility>

namespace qw {
namespace {

// --- minimal relations ----------------------------------------------------

// Smallest (by size, then by mask order) nonempty subset of `live` whose
// sub-sum lies in the ideal; returns an empty vector when only the full set
// works. Supports are tiny, so subset enumeration is exact and cheap.
std::vector<int> smallest_ideal_subsum(const AlgebraBasis& alg,
                                       const std::vector<Path>& paths,
                                       const std::vector<Scalar>& coeffs,
                                       const std::vector<int>& live) {
  const int n = static_cast<int>(live.size());
  for (int size = 1; size < n; ++size) {
    // Masks enumerated in increasing numeric order within a popcount class
    // keep the decomposition deterministic.
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
      if (__builtin_popcount(mask) != size) continue;
      LinComb sub(alg.field());
      for (int i = 0; i < n; ++i)
        if (mask & (1u << i)) sub.add(paths[live[i]], coeffs[live[i]]);
      if (!alg.in_ideal(sub)) continue;
      std::vector<int> out;
      for (int i = 0; i < n; ++i)
        if (mask & (1u << i)) out.push_back(live[i]);
      return out;
    }
  }
  return {};
}

// --- words ------------------------------------------------------------------

std::vector<int> inverse_word(const std::vector<int>& w) {
  std::vector<int> out(w.rbegin(), w.rend());
  for (int& x : out) x = -x;
  return out;
}

std::vector<int> free_reduce(const std::vector<int>& w) {
  std::vector<int> out;
  for (int x : w) {
    if (!out.empty() && out.back() == -x)
      out.pop_back();
    else
      out.push_back(x);
  }
  return out;
}

std::vector<int> cyclic_reduce(std::vector<int> w) {
  w = free_reduce(w);
  std::size_t i = 0, j = w.size();
  while (j > i + 1 && w[i] == -w[j - 1]) ++i, --j;
  return {w.begin() + i, w.begin() + j};
}

// Canonical representative of a relator up to rotation and inversion, used
// for deduplication.
std::vector<int> canonical_cyclic(const std::vector<int>& w) {
  if (w.empty()) return w;
  std::vector<int> best;
  for (const std::vector<int>& base : {w, inverse_word(w)})
    for (std::size_t r = 0; r < base.size(); ++r) {
      std::vector<int> rot(base.begin() + r, base.end());
      rot.insert(rot.end(), base.begin(), base.begin() + r);
      if (best.empty() || rot < best) best = rot;
    }
  return best;
}

// --- Tietze simplification ---------------------------------------------------

// Working state with stable generator slots; dead slots stay in place so
// letters never need renumbering mid-flight.
struct TietzeState {
  std::vector<std::string> names;
  std::vector<char> alive;
  std::vector<std::vector<int>> relators;

  GroupPresentation compact() const {
    GroupPresentation gp;
    std::vector<int> slot_to_new(names.size(), -1);
    for (std::size_t i = 0; i < names.size(); ++i)
      if (alive[i]) {
        slot_to_new[i] = static_cast<int>(gp.generators.size());
        gp.generators.push_back(names[i]);
      }
    for (const auto& r : relators) {
      std::vector<int> w;
      for (int x : r) {
        int g = slot_to_new[std::abs(x) - 1];
        w.push_back(x > 0 ? g + 1 : -(g + 1));
      }
      gp.relators.push_back(std::move(w));
    }
    return gp;
  }
};

// Reduce, drop empty relators, deduplicate. Returns true when anything
// changed.
bool normalize(TietzeState& st) {
  bool changed = false;
  std::set<std::vector<int>> seen;
  std::vector<std::vector<int>> kept;
  for (const auto& r : st.relators) {
    std::vector<int> red = cyclic_reduce(r);
    if (red != r) changed = true;
    if (red.empty()) {
      changed = true;
      continue;
    }
    if (!seen.insert(canonical_cyclic(red)).second) {
      changed = true;
      continue;
    }
    kept.push_back(std::move(red));
  }
  st.relators = std::move(kept);
  return changed;
}

// Replace generator slot g (1-based letter value) by the word `value`
// everywhere, then drop the slot.
void substitute(TietzeState& st, int g, const std::vector<int>& value) {
  std::vector<int> inv = inverse_word(value);
  for (auto& r : st.relators) {
    std::vector<int> out;
    for (int x : r) {
      if (x == g)
        out.insert(out.end(), value.begin(), value.end());
      else if (x == -g)
        out.insert(out.end(), inv.begin(), inv.end());
      else
        out.push_back(x);
    }
    r = free_reduce(out);
  }
  st.alive[g - 1] = 0;
}

// One elimination move: find a relator in which some generator occurs
// exactly once, solve for it, substitute. Returns true if a move was made.
bool eliminate_once(TietzeState& st) {
  for (std::size_t ri = 0; ri < st.relators.size(); ++ri) {
    const std::vector<int>& r = st.relators[ri];
    for (std::size_t pos = 0; pos < r.size(); ++pos) {
      int g = std::abs(r[pos]);
      int count = 0;
      for (int x : r) count += (std::abs(x) == g);
      if (count != 1) continue;
      // Rotate the relator so the occurrence comes first: g u = 1 gives
      // g = u^{-1}, and g^{-1} u = 1 gives g = u.
      std::vector<int> rot(r.begin() + pos, r.end());
      rot.insert(rot.end(), r.begin(), r.begin() + pos);
      std::vector<int> u(rot.begin() + 1, rot.end());
      std::vector<int> value = rot[0] > 0 ? inverse_word(u) : u;
      st.relators.erase(st.relators.begin() + ri);
      substitute(st, g, value);
      return true;
    }
  }
  return false;
}

std::size_t total_length(const TietzeState& st) {
  std::size_t n = 0;
  for (const auto& r : st.relators) n += r.size();
  return n;
}

// --- Smith normal form -------------------------------------------------------

// Invariant factors of an integer matrix, exact over GMP integers.
std::vector<mpz_class> smith_invariants(std::vector<std::vector<mpz_class>> m) {
  std::vector<mpz_class> divs;
  if (m.empty() || m[0].empty()) return divs;
  const std::size_t rows = m.size(), cols = m[0].size();
  std::size_t t = 0;
  while (t < rows && t < cols) {
    // Pick the nonzero entry of least absolute value as pivot.
    std::size_t pi = t, pj = t;
    bool found = false;
    for (std::size_t i = t; i < rows; ++i)
      for (std::size_t j = t; j < cols; ++j)
        if (m[i][j] != 0 &&
            (!found || abs(m[i][j]) < abs(m[pi][pj]))) {
          pi = i;
          pj = j;
          found = true;
        }
    if (!found) break;
    std::swap(m[t], m[pi]);
    for (std::size_t i = 0; i < rows; ++i) std::swap(m[i][t], m[i][pj]);

    bool clean = false;
    while (!clean) {
      clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (m[i][t] == 0) continue;
        mpz_class q = m[i][t] / m[t][t];
        for (std::size_t j = t; j < cols; ++j) m[i][j] -= q * m[t][j];
        if (m[i][t] != 0) {  // remainder is strictly smaller: promote it
          std::swap(m[t], m[i]);
          clean = false;
        }
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (m[t][j] == 0) continue;
        mpz_class q = m[t][j] / m[t][t];
        for (std::size_t i = t; i < rows; ++i) m[i][j] -= q * m[i][t];
        if (m[t][j] != 0) {
          for (std::size_t i = 0; i < rows; ++i) std::swap(m[i][t], m[i][j]);
          clean = false;
        }
      }
      if (clean) {
        // Divisibility: the pivot must divide everything below-right.
        for (std::size_t i = t + 1; i < rows && clean; ++i)
          for (std::size_t j = t + 1; j < cols && clean; ++j)
            if (m[i][j] % m[t][t] != 0) {
              for (std::size_t jj = t; jj < cols; ++jj) m[t][jj] += m[i][jj];
              clean = false;
            }
      }
    }
    divs.push_back(abs(m[t][t]));
    ++t;
  }
  return divs;
}

}  // namespace

HomotopyRelationSet minimal_relation_pairs(const AlgebraBasis& alg) {
  HomotopyRelationSet out;
  std::set<std::pair<Path, Path>> seen;
  for (const LinComb& rel : alg.presentation().relations) {
    std::vector<Path> paths;
    std::vector<Scalar> coeffs;
    for (const auto& [p, c] : rel.terms()) {
      paths.push_back(p);
      coeffs.push_back(c);
    }
    if (paths.size() > 16)
      throw DomainError("RelationTooLarge",
                        "relation has more than 16 terms");
    std::vector<int> live(paths.size());
    for (std::size_t i = 0; i < live.size(); ++i) live[i] = static_cast<int>(i);

    while (!live.empty()) {
      std::vector<int> part = smallest_ideal_subsum(alg, paths, coeffs, live);
      if (part.empty()) part = live;  // the remainder itself is minimal
      for (std::size_t i = 0; i < part.size(); ++i)
        for (std::size_t j = i + 1; j < part.size(); ++j) {
          Path a = paths[part[i]], b = paths[part[j]];
          if (b < a) std::swap(a, b);
          if (seen.insert({a, b}).second) out.pairs.push_back({a, b});
        }
      std::vector<int> rest;
      std::set_difference(live.begin(), live.end(), part.begin(), part.end(),
                          std::back_inserter(rest));
      live = std::move(rest);
    }
  }
  return out;
}

GroupPresentation pi1_presentation(const AlgebraBasis& alg,
                                   const std::string& basepoint) {
  const Quiver& q = alg.quiver();
  if (!q.connected())
    throw DomainError("Disconnected", "pi_1 needs a connected quiver");
  int root = q.vertex(basepoint);

  // BFS spanning tree; arrows scanned in input order from each vertex.
  std::vector<char> in_tree(q.num_arrows(), 0), seen(q.num_vertices(), 0);
  std::queue<int> bfs;
  seen[root] = 1;
  bfs.push(root);
  while (!bfs.empty()) {
    int v = bfs.front();
    bfs.pop();
    for (int a = 0; a < q.num_arrows(); ++a) {
      const Arrow& ar = q.arrow(a);
      int other = -1;
      if (ar.src == v) other = ar.dst;
      else if (ar.dst == v) other = ar.src;
      if (other < 0 || seen[other]) continue;
      in_tree[a] = 1;
      seen[other] = 1;
      bfs.push(other);
    }
  }

  GroupPresentation gp;
  std::vector<int> chord(q.num_arrows(), -1);
  for (int a = 0; a < q.num_arrows(); ++a)
    if (!in_tree[a]) {
      chord[a] = static_cast<int>(gp.generators.size());
      gp.generators.push_back(q.arrow(a).name);
    }

  // A path traverses its arrows forward (application order), so its chord
  // word reads off the generators it crosses.
  auto word_of = [&](const Path& p) {
    std::vector<int> w;
    for (int a : p.arrows)
      if (chord[a] >= 0) w.push_back(chord[a] + 1);
    return w;
  };
  for (const HomotopyPair& pr : minimal_relation_pairs(alg).pairs) {
    std::vector<int> w = word_of(pr.a);
    std::vector<int> v = inverse_word(word_of(pr.b));
    w.insert(w.end(), v.begin(), v.end());
    gp.relators.push_back(free_reduce(w));
  }
  return gp;
}

Abelianization abelianization(const GroupPresentation& gp) {
  Abelianization ab;
  const std::size_t n = gp.generators.size();
  if (n == 0) return ab;
  std::vector<std::vector<mpz_class>> m;
  for (const auto& r : gp.relators) {
    std::vector<mpz_class> row(n, 0);
    for (int x : r) row[std::abs(x) - 1] += (x > 0 ? 1 : -1);
    m.push_back(std::move(row));
  }
  std::vector<mpz_class> divs = m.empty() ? std::vector<mpz_class>{}
                                          : smith_invariants(std::move(m));
  int rank = 0;
  for (const mpz_class& d : divs) {
    if (d == 0) continue;
    ++rank;
    if (d > 1) ab.torsion.push_back(d);
  }
  ab.free_rank = static_cast<int>(n) - rank;
  return ab;
}

std::string Abelianization::str() const {
  std::string s;
  auto append = [&](const std::string& part) {
    if (!s.empty()) s += " + ";
    s += part;
  };
  if (free_rank == 1) append("Z");
  else if (free_rank > 1) append("Z^" + std::to_string(free_rank));
  for (const mpz_class& d : torsion) append("Z/" + d.get_str());
  return s.empty() ? "0" : s;
}

std::string GroupVerdict::str() const {
  switch (kind) {
    case Kind::trivial: return "trivial";
    case Kind::free_group: return "free(" + std::to_string(rank) + ")";
    case Kind::unknown: break;
  }
  return "unknown(ab = " + ab.str() + ")";
}

GroupVerdict simplify_group(const GroupPresentation& gp,
                            std::vector<GroupPresentation>* trace) {
  TietzeState st;
  st.names = gp.generators;
  st.alive.assign(st.names.size(), 1);
  st.relators = gp.relators;
  if (trace) trace->push_back(st.compact());

  // Substitution can blow words up; stop honestly rather than loop.
  const std::size_t length_cap = 100000;
  for (;;) {
    bool changed = normalize(st);
    if (changed && trace) trace->push_back(st.compact());
    if (total_length(st) > length_cap) break;
    if (!eliminate_once(st)) break;
    if (trace) trace->push_back(st.compact());
  }

  GroupPresentation fin = st.compact();
  GroupVerdict v;
  v.ab = abelianization(fin);
  if (fin.generators.empty()) {
    v.kind = GroupVerdict::Kind::trivial;
  } else if (fin.relators.empty()) {
    v.kind = GroupVerdict::Kind::free_group;
    v.rank = static_cast<int>(fin.generators.size());
  } else {
    v.kind = GroupVerdict::Kind::unknown;
  }
  return v;
}

}  // namespace qw
