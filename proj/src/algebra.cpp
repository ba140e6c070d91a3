#include "quiverworks/algebra.hpp"

#include <algorithm>
#include <queue>

namespace qw {

std::vector<Path> enumerate_paths(const Quiver& q, int maxlen) {
  std::vector<Path> out;
  std::vector<Path> layer;
  for (int v = 0; v < q.num_vertices(); ++v) layer.push_back(Path::lazy(v));
  out = layer;
  for (int len = 1; len <= maxlen; ++len) {
    std::vector<Path> next;
    for (const Path& p : layer) {
      int t = p.target(q);
      for (int a = 0; a < q.num_arrows(); ++a) {
        if (q.arrow(a).src != t) continue;
        Path ext = p;
        ext.arrows.push_back(a);
        next.push_back(ext);
      }
    }
    out.insert(out.end(), next.begin(), next.end());
    layer = std::move(next);
    if (layer.empty()) break;
  }
  return out;
}

void AlgebraPresentation::check_relations() const {
  for (const LinComb& r : relations) {
    if (r.is_zero()) throw DomainError("ZeroRelation", "relation with no terms");
    if (!r.check_uniform(quiver))
      throw DomainError("RelationNotUniform",
                        "relation mixes paths with different endpoints: " + r.str(quiver));
    for (const auto& [p, c] : r.terms()) {
      (void)c;
      if (p.length() < 2)
        throw DomainError("RelationTooShort",
                          "relation term shorter than two arrows: " + p.str(quiver));
    }
  }
}

std::size_t AlgebraBasis::col(const Path& p) const {
  auto it = path_pos_.find(p);
  if (it == path_pos_.end()) throw DomainError("Internal", "path outside basis window");
  return all_paths_.size() - 1 - static_cast<std::size_t>(it->second);
}

AlgebraBasis AlgebraBasis::compute(const AlgebraPresentation& pres, int cap) {
  pres.check_relations();
  if (cap < 2 || cap > 64) throw DomainError("BadCap", "path length cap must be in [2, 64]");
  const Quiver& Q = pres.quiver;
  const Field& F = pres.field;

  for (int M = 2; M <= cap + 1; ++M) {
    AlgebraBasis B;
    B.pres_ = std::make_shared<AlgebraPresentation>(pres);
    B.window_ = M;
    B.all_paths_ = enumerate_paths(Q, M - 1);
    for (std::size_t i = 0; i < B.all_paths_.size(); ++i)
      B.path_pos_[B.all_paths_[i]] = static_cast<int>(i);
    const std::size_t n = B.all_paths_.size();
    B.ideal_ = RowReducer(F, n);

    // Span of the ideal image: truncations of p * r * q (q first).
    for (const LinComb& r : pres.relations) {
      int rs = 0, rt = 0;
      r.check_uniform(Q, &rs, &rt);
      std::size_t rmin = r.terms().begin()->first.length();
      for (const auto& [term, c] : r.terms()) {
        (void)c;
        rmin = std::min(rmin, term.length());
      }
      for (const Path& q : B.all_paths_) {
        if (q.target(Q) != rs) continue;
        if (q.length() + rmin > static_cast<std::size_t>(M - 1)) continue;
        for (const Path& p : B.all_paths_) {
          if (p.source() != rt) continue;
          if (q.length() + p.length() + rmin > static_cast<std::size_t>(M - 1)) continue;
          Vec v = zero_vec(F, n);
          bool any = false;
          for (const auto& [term, c] : r.terms()) {
            if (q.length() + term.length() + p.length() > static_cast<std::size_t>(M - 1))
              continue;  // truncated away
            Path prod = q;
            prod.arrows.insert(prod.arrows.end(), term.arrows.begin(), term.arrows.end());
            prod.arrows.insert(prod.arrows.end(), p.arrows.begin(), p.arrows.end());
            v[B.col(prod)] = v[B.col(prod)] + c;
            any = true;
          }
          if (any) B.ideal_.insert(std::move(v));
        }
      }
    }

    // Certificate: every path of length M-1 must lie in the span.
    bool certified = true;
    for (const Path& p : B.all_paths_) {
      if (p.length() != static_cast<std::size_t>(M - 1)) continue;
      Vec e = zero_vec(F, n);
      e[B.col(p)] = Scalar::of(F, 1);
      if (!B.ideal_.contains(e)) {
        certified = false;
        break;
      }
    }
    if (!certified) continue;

    B.nil_degree_ = M - 1;
    for (std::size_t i = 0; i < n; ++i) {
      const Path& p = B.all_paths_[i];
      if (!B.ideal_.is_pivot(B.col(p))) {
        B.basis_pos_[p] = static_cast<int>(B.basis_.size());
        B.basis_.push_back(p);
      }
    }
    return B;
  }
  throw DomainError("NotFiniteDimensional",
                    "no power of the arrow ideal reduces to zero below the cap; "
                    "the algebra is infinite-dimensional or the cap is too small");
}

int AlgebraBasis::basis_index(const Path& p) const {
  auto it = basis_pos_.find(p);
  return it == basis_pos_.end() ? -1 : it->second;
}

std::vector<int> AlgebraBasis::pair_basis(int x, int y) const {
  std::vector<int> out;
  for (int i = 0; i < dim(); ++i)
    if (basis_[i].source() == x && basis_[i].target(quiver()) == y) out.push_back(i);
  return out;
}

std::vector<int> AlgebraBasis::radical_basis() const {
  std::vector<int> out;
  for (int i = 0; i < dim(); ++i)
    if (basis_[i].length() >= 1) out.push_back(i);
  return out;
}

Vec AlgebraBasis::to_window_vec(const LinComb& v) const {
  Vec w = zero_vec(field(), all_paths_.size());
  for (const auto& [p, c] : v.terms()) {
    if (p.length() >= static_cast<std::size_t>(nil_degree_)) continue;  // in the ideal
    w[col(p)] = w[col(p)] + c;
  }
  return w;
}

Vec AlgebraBasis::coords(const LinComb& v) const {
  Vec nf = ideal_.reduce(to_window_vec(v));
  Vec out = zero_vec(field(), basis_.size());
  for (std::size_t c = 0; c < nf.size(); ++c) {
    if (nf[c].is_zero()) continue;
    const Path& p = all_paths_[all_paths_.size() - 1 - c];
    auto it = basis_pos_.find(p);
    if (it == basis_pos_.end())
      throw DomainError("Internal", "normal form touched a pivot column");
    out[static_cast<std::size_t>(it->second)] = nf[c];
  }
  return out;
}

LinComb AlgebraBasis::normal_form(const LinComb& v) const { return from_coords(coords(v)); }

LinComb AlgebraBasis::from_coords(const Vec& c) const {
  if (c.size() != basis_.size()) throw DomainError("ShapeMismatch", "coordinate length");
  LinComb out(field());
  for (std::size_t i = 0; i < c.size(); ++i) out.add(basis_[i], c[i]);
  return out;
}

Vec AlgebraBasis::multiply(int i, int j) const {
  const Path& pi = basis_.at(i);
  const Path& pj = basis_.at(j);
  if (pj.target(quiver()) != pi.source()) return zero_vec(field(), basis_.size());
  Path prod = pj;
  prod.arrows.insert(prod.arrows.end(), pi.arrows.begin(), pi.arrows.end());
  LinComb v = LinComb::term(field(), Scalar::of(field(), 1), prod);
  return coords(v);
}

AlgebraPresentation restrict_to_convex(const AlgebraPresentation& pres,
                                       const std::set<std::string>& vertices) {
  const Quiver& Q = pres.quiver;
  std::vector<char> in(Q.num_vertices(), 0);
  for (const std::string& name : vertices) in[Q.vertex(name)] = 1;

  // Convexity: no directed path leaves the set and comes back. Equivalently
  // no outside vertex is both reachable from the set and able to reach it.
  auto mark = [&](bool forward) {
    std::vector<char> seen(Q.num_vertices(), 0);
    std::vector<int> stack;
    for (int v = 0; v < Q.num_vertices(); ++v)
      if (in[v]) stack.push_back(v);
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (const Arrow& a : Q.arrows()) {
        int from = forward ? a.src : a.dst;
        int to = forward ? a.dst : a.src;
        if (from != v || in[to] || seen[to]) continue;
        seen[to] = 1;
        stack.push_back(to);
      }
    }
    return seen;
  };
  std::vector<char> down = mark(true), up = mark(false);
  for (int v = 0; v < Q.num_vertices(); ++v)
    if (down[v] && up[v])
      throw DomainError("NotConvex", "vertex '" + Q.vertex_name(v) +
                                         "' lies on a path between chosen vertices");

  AlgebraPresentation out;
  out.field = pres.field;
  out.name = pres.name;
  std::vector<int> vmap(Q.num_vertices(), -1);
  for (int v = 0; v < Q.num_vertices(); ++v)
    if (in[v]) vmap[v] = out.quiver.add_vertex(Q.vertex_name(v));
  std::vector<int> amap(Q.num_arrows(), -1);
  for (int a = 0; a < Q.num_arrows(); ++a) {
    const Arrow& ar = Q.arrow(a);
    if (in[ar.src] && in[ar.dst])
      amap[a] = out.quiver.add_arrow(ar.name, vmap[ar.src], vmap[ar.dst]);
  }
  for (const LinComb& r : pres.relations) {
    int rs = 0, rt = 0;
    r.check_uniform(Q, &rs, &rt);
    if (!in[rs] || !in[rt]) continue;  // endpoints outside: relation drops
    LinComb nr(pres.field);
    for (const auto& [p, c] : r.terms()) {
      Path np{vmap[p.base], {}};
      for (int a : p.arrows) {
        // Convexity guarantees interior vertices stay inside, hence arrows map.
        if (amap[a] < 0)
          throw DomainError("Internal", "convex restriction lost an arrow");
        np.arrows.push_back(amap[a]);
      }
      nr.add(np, c);
    }
    out.relations.push_back(nr);
  }
  return out;
}

std::string validation_report(const AlgebraBasis& B) {
  const Quiver& Q = B.quiver();
  std::string s;
  s += "field: " + B.field().name() + "\n";
  s += "vertices: " + std::to_string(Q.num_vertices()) +
       ", arrows: " + std::to_string(Q.num_arrows()) +
       ", relations: " + std::to_string(B.presentation().relations.size()) + "\n";
  s += "dim A = " + std::to_string(B.dim()) +
       ", paths of length >= " + std::to_string(B.nil_degree()) + " vanish\n";
  for (int x = 0; x < Q.num_vertices(); ++x)
    for (int y = 0; y < Q.num_vertices(); ++y) {
      std::vector<int> pb = B.pair_basis(x, y);
      if (pb.empty()) continue;
      s += "  e_" + Q.vertex_name(y) + " A e_" + Q.vertex_name(x) + ": ";
      for (std::size_t i = 0; i < pb.size(); ++i) {
        if (i) s += ", ";
        s += B.basis_path(pb[i]).str(Q);
      }
      s += "\n";
    }
  return s;
}

}  // namespace qw
