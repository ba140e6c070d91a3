#include "quiverworks/translation_quiver.hpp"

#include <algorithm>

namespace qw {

int TranslationQuiver::add_vertex(const std::string& vname, bool proj, bool inj, bool bdry) {
  int id = q.add_vertex(vname);
  projective.push_back(proj ? 1 : 0);
  injective.push_back(inj ? 1 : 0);
  boundary.push_back(bdry ? 1 : 0);
  return id;
}

int TranslationQuiver::add_arrow(const std::string& aname, const std::string& src,
                                 const std::string& dst) {
  return q.add_arrow(aname, src, dst);
}

std::optional<int> TranslationQuiver::tau_of(int v) const {
  auto it = tau.find(v);
  if (it == tau.end()) return std::nullopt;
  return it->second;
}

std::optional<int> TranslationQuiver::tau_inv_of(int v) const {
  for (const auto& [z, w] : tau)
    if (w == v) return z;
  return std::nullopt;
}

std::map<int, int> validate_translation_quiver(const TranslationQuiver& tq) {
  const Quiver& Q = tq.q;
  // tau: defined exactly on non-projective interior vertices, injective,
  // avoiding injective targets.
  std::map<int, int> tau_inv;
  for (const auto& [z, w] : tq.tau) {
    if (tq.is_projective(z))
      throw DomainError("BadTau", "tau defined on projective vertex " + Q.vertex_name(z));
    if (tq.is_injective(w))
      throw DomainError("BadTau", "tau hits injective vertex " + Q.vertex_name(w));
    if (!tau_inv.emplace(w, z).second)
      throw DomainError("BadTau", "tau not injective at " + Q.vertex_name(w));
  }
  for (int v = 0; v < Q.num_vertices(); ++v)
    if (!tq.is_projective(v) && !tq.is_boundary(v) && !tq.tau.count(v))
      throw DomainError("MissingTau", "non-projective interior vertex " + Q.vertex_name(v) +
                                          " has no translate");

  std::map<int, int> sigma;
  // Explicit entries first.
  for (const auto& [a, b] : tq.sigma) {
    const Arrow& in = Q.arrow(a);
    auto w = tq.tau_of(in.dst);
    if (!w)
      throw DomainError("BadSigma", "sigma on arrow '" + in.name +
                                        "' into a vertex without a translate");
    const Arrow& out = Q.arrow(b);
    if (out.src != *w || out.dst != in.src)
      throw DomainError("BadSigma", "sigma(" + in.name + ") must run " +
                                        Q.vertex_name(*w) + " -> " + Q.vertex_name(in.src));
    if (!sigma.emplace(a, b).second)
      throw DomainError("BadSigma", "sigma given twice for '" + in.name + "'");
  }
  // Mesh pairing for every translated, non-boundary vertex.
  for (const auto& [z, w] : tq.tau) {
    if (tq.is_boundary(z)) continue;
    std::vector<char> used(Q.num_arrows(), 0);
    for (const auto& [a, b] : sigma)
      if (Q.arrow(a).dst == z) {
        if (used[b]) throw DomainError("BadSigma", "two arrows share sigma image");
        used[b] = 1;
      }
    for (int y = 0; y < Q.num_vertices(); ++y) {
      std::vector<int> ins, outs;
      for (int a = 0; a < Q.num_arrows(); ++a) {
        if (Q.arrow(a).src == y && Q.arrow(a).dst == z && !sigma.count(a)) ins.push_back(a);
        if (Q.arrow(a).src == w && Q.arrow(a).dst == y && !used[a]) outs.push_back(a);
      }
      if (ins.size() != outs.size())
        throw DomainError("MeshMismatch",
                          "mesh at " + Q.vertex_name(z) + ": " + std::to_string(ins.size()) +
                              " arrow(s) from " + Q.vertex_name(y) + " but " +
                              std::to_string(outs.size()) + " arrow(s) back from " +
                              Q.vertex_name(w));
      for (std::size_t i = 0; i < ins.size(); ++i) sigma[ins[i]] = outs[i];
    }
  }
  return sigma;
}

LinComb mesh_relation(const TranslationQuiver& tq, const Field& f,
                      const std::map<int, int>& sigma, int z) {
  LinComb m(f);
  for (int a = 0; a < tq.q.num_arrows(); ++a) {
    if (tq.q.arrow(a).dst != z) continue;
    auto it = sigma.find(a);
    if (it == sigma.end())
      throw DomainError("BadSigma", "no polarization for arrow '" + tq.q.arrow(a).name + "'");
    Path p;
    p.base = tq.q.arrow(it->second).src;
    p.arrows = {it->second, a};
    m.add(p, Scalar::of(f, 1));
  }
  return m;
}

MeshCategory::MeshCategory(const TranslationQuiver& tq, const Field& f)
    : tq_(tq), f_(f) {
  sigma_ = validate_translation_quiver(tq_);
  for (const auto& [z, w] : tq_.tau) {
    (void)w;
    if (!tq_.is_boundary(z)) meshes_.push_back(mesh_relation(tq_, f_, sigma_, z));
  }
  paths_.push_back({});
  for (int v = 0; v < tq_.q.num_vertices(); ++v) {
    pos_[Path::lazy(v)] = static_cast<int>(paths_[0].size());
    paths_[0].push_back(Path::lazy(v));
  }
  ideal_.emplace_back(f_, paths_[0].size());
  built_ = 0;
}

void MeshCategory::extend(int d) {
  const Quiver& Q = tq_.q;
  for (int deg = built_ + 1; deg <= d; ++deg) {
    std::vector<Path> layer;
    for (const Path& p : paths_[deg - 1]) {
      int t = p.target(Q);
      for (int a = 0; a < Q.num_arrows(); ++a) {
        if (Q.arrow(a).src != t) continue;
        Path ext = p;
        ext.arrows.push_back(a);
        layer.push_back(ext);
      }
    }
    for (std::size_t i = 0; i < layer.size(); ++i) pos_[layer[i]] = static_cast<int>(i);
    RowReducer red(f_, layer.size());
    // Degree-d slice of the homogeneous mesh ideal: p * m_z * q with
    // deg p + 2 + deg q = d.
    for (const LinComb& m : meshes_) {
      int ms = m.terms().begin()->first.source();
      int mt = m.terms().begin()->first.target(Q);
      for (int dq = 0; dq + 2 <= deg; ++dq) {
        int dp = deg - 2 - dq;
        for (const Path& qpath : paths_[dq]) {
          if (qpath.target(Q) != ms) continue;
          for (const Path& ppath : paths_[dp]) {
            if (ppath.source() != mt) continue;
            Vec v = zero_vec(f_, layer.size());
            for (const auto& [term, c] : m.terms()) {
              Path prod = qpath;
              prod.arrows.insert(prod.arrows.end(), term.arrows.begin(), term.arrows.end());
              prod.arrows.insert(prod.arrows.end(), ppath.arrows.begin(), ppath.arrows.end());
              v[pos_.at(prod)] = v[pos_.at(prod)] + c;
            }
            red.insert(std::move(v));
          }
        }
      }
    }
    paths_.push_back(std::move(layer));
    ideal_.push_back(std::move(red));
    built_ = deg;
  }
}

const std::vector<Path>& MeshCategory::paths_of_degree(int d) {
  extend(d);
  return paths_[d];
}

int MeshCategory::dim(int x, int y, int d) {
  extend(d);
  const Quiver& Q = tq_.q;
  int all = 0, dead = 0;
  for (std::size_t i = 0; i < paths_[d].size(); ++i) {
    const Path& p = paths_[d][i];
    if (p.source() != x || p.target(Q) != y) continue;
    ++all;
    if (ideal_[d].is_pivot(i)) ++dead;
  }
  return all - dead;
}

std::vector<LinComb> MeshCategory::basis(int x, int y, int d) {
  extend(d);
  const Quiver& Q = tq_.q;
  std::vector<LinComb> out;
  for (std::size_t i = 0; i < paths_[d].size(); ++i) {
    const Path& p = paths_[d][i];
    if (p.source() != x || p.target(Q) != y) continue;
    if (!ideal_[d].is_pivot(i)) out.push_back(LinComb::term(f_, Scalar::of(f_, 1), p));
  }
  return out;
}

Vec MeshCategory::coords(const LinComb& v, int d) {
  extend(d);
  Vec w = zero_vec(f_, paths_[d].size());
  for (const auto& [p, c] : v.terms()) {
    if (static_cast<int>(p.length()) != d)
      throw DomainError("ShapeMismatch", "mixed degrees in mesh coordinates");
    w[pos_.at(p)] = w[pos_.at(p)] + c;
  }
  return ideal_[d].reduce(std::move(w));
}

std::optional<int> MeshCategory::total_dim(int x, int y, int cap) {
  int window = std::max(1, tq_.q.num_vertices());
  int total = 0, zero_run = 0;
  for (int d = 0; d <= cap; ++d) {
    int k = dim(x, y, d);
    total += k;
    zero_run = (k == 0) ? zero_run + 1 : 0;
    if (zero_run >= window) return total;
  }
  return std::nullopt;
}

std::string export_dot(const TranslationQuiver& tq) {
  const Quiver& Q = tq.q;
  std::string s = "digraph component {\n  rankdir=LR;\n";
  for (int v = 0; v < Q.num_vertices(); ++v) {
    s += "  \"" + Q.vertex_name(v) + "\" [";
    s += tq.is_projective(v) ? "shape=box" : "shape=ellipse";
    if (tq.is_injective(v)) s += ",peripheries=2";
    if (tq.is_boundary(v)) s += ",style=dashed";
    s += "];\n";
  }
  for (int a = 0; a < Q.num_arrows(); ++a)
    s += "  \"" + Q.vertex_name(Q.arrow(a).src) + "\" -> \"" + Q.vertex_name(Q.arrow(a).dst) +
         "\" [label=\"" + Q.arrow(a).name + "\"];\n";
  for (const auto& [z, w] : tq.tau)
    s += "  \"" + Q.vertex_name(z) + "\" -> \"" + Q.vertex_name(w) +
         "\" [style=dotted,constraint=false,color=gray];\n";
  return s + "}\n";
}

}  // namespace qw
