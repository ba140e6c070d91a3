#include "quiverworks/tq_covering.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>
#include <tuple>

namespace qw {

namespace {

struct UnionFind {
  std::vector<int> up;
  explicit UnionFind(int n) : up(n) { std::iota(up.begin(), up.end(), 0); }
  int find(int x) {
    while (up[x] != x) x = up[x] = up[up[x]];
    return x;
  }
  void unite(int x, int y) {
    x = find(x);
    y = find(y);
    if (x == y) return;
    if (x > y) std::swap(x, y);
    up[y] = x;  // smallest member wins, so roots double as canonical reps
  }
};

// x is tau-periodic iff iterating tau returns to x. tau is injective, so a
// trajectory either runs off the domain or closes up through x itself;
// num_vertices steps decide. Injectivity also makes periodicity constant
// along tau-orbits and sigma-orbits, which the orbit graph relies on.
std::vector<char> periodic_flags(const TranslationQuiver& tq) {
  const int n = tq.q.num_vertices();
  std::vector<char> per(n, 0);
  for (int x = 0; x < n; ++x) {
    int y = x;
    for (int step = 0; step < n; ++step) {
      auto t = tq.tau_of(y);
      if (!t) break;
      y = *t;
      if (y == x) {
        per[x] = 1;
        break;
      }
    }
  }
  return per;
}

struct OrbitData {
  OrbitGraph og;
  std::vector<char> per;   // per tq vertex
  std::vector<int> ov_of;  // tq vertex -> orbit-graph vertex
  int generic_edges = 0;   // edges after merging parallel strands
};

OrbitData build_orbit_graph(const TranslationQuiver& tq) {
  std::map<int, int> sigma = validate_translation_quiver(tq);
  const Quiver& Q = tq.q;
  const int nv = Q.num_vertices();
  const int na = Q.num_arrows();

  OrbitData d;
  d.per = periodic_flags(tq);

  // Vertex classes: tau glues every orbit; a periodic component additionally
  // swallows arrows running between periodic vertices.
  UnionFind uf(nv);
  for (const auto& [z, w] : tq.tau) uf.unite(z, w);
  for (int a = 0; a < na; ++a) {
    const Arrow& ar = Q.arrow(a);
    if (d.per[ar.src] && d.per[ar.dst]) uf.unite(ar.src, ar.dst);
  }
  d.ov_of.assign(nv, -1);
  for (int v = 0; v < nv; ++v) {
    int r = uf.find(v);  // r <= v, already numbered when v > r
    if (d.ov_of[r] < 0) {
      d.ov_of[r] = d.og.order();
      d.og.members.push_back({});
      d.og.periodic.push_back(d.per[v]);
    }
    d.ov_of[v] = d.ov_of[r];
    d.og.members[d.ov_of[v]].push_back(v);
  }
  for (int i = 0; i < d.og.order(); ++i)
    if (d.og.periodic[i]) d.og.loops.push_back(i);

  // One edge per sigma-orbit of arrows, except that an orbit inside the
  // periodic part contributes nothing (it already lives in one component).
  // All arrows of an orbit connect the same pair of classes; the check
  // guards the invariant rather than trusting it.
  UnionFind sf(na), gf(na);
  for (const auto& [a, b] : sigma) {
    sf.unite(a, b);
    gf.unite(a, b);
  }
  for (int a = 0; a < na; ++a)
    for (int b = a + 1; b < na; ++b)
      if (Q.arrow(a).src == Q.arrow(b).src && Q.arrow(a).dst == Q.arrow(b).dst)
        gf.unite(a, b);  // parallel strands: generically one irreducible map

  const std::pair<int, int> none{-1, -1};
  std::map<int, std::pair<int, int>> contributes;  // sf root -> edge or none
  for (int a = 0; a < na; ++a) {
    const Arrow& ar = Q.arrow(a);
    std::pair<int, int> cand = none;
    if (!(d.per[ar.src] && d.per[ar.dst])) {
      int u = d.ov_of[ar.src], v = d.ov_of[ar.dst];
      cand = {std::min(u, v), std::max(u, v)};
    }
    auto [it, fresh] = contributes.emplace(sf.find(a), cand);
    if (!fresh && it->second != cand)
      throw DomainError("Internal", "polarization orbit of '" + ar.name +
                                        "' meets inconsistent orbit-graph endpoints");
  }
  for (const auto& [r, e] : contributes)
    if (e != none) d.og.edges.push_back(e);
  std::sort(d.og.edges.begin(), d.og.edges.end());

  std::set<int> merged;
  for (int a = 0; a < na; ++a)
    if (contributes.at(sf.find(a)) != none) merged.insert(gf.find(a));
  d.generic_edges = static_cast<int>(merged.size());
  return d;
}

}  // namespace

int OrbitGraph::orbit_of(int tq_vertex) const {
  for (int i = 0; i < order(); ++i)
    if (std::binary_search(members[i].begin(), members[i].end(), tq_vertex)) return i;
  return -1;
}

std::vector<std::pair<int, int>> OrbitGraph::edge_multiset() const {
  auto all = edges;
  for (int l : loops) all.emplace_back(l, l);
  std::sort(all.begin(), all.end());
  return all;
}

OrbitGraph orbit_graph(const TranslationQuiver& tq) { return build_orbit_graph(tq).og; }

std::string orbit_graph_summary(const OrbitGraph& og, const TranslationQuiver& tq) {
  std::ostringstream out;
  out << "orbit graph: " << og.order() << " vertices, " << og.size() << " edges\n";
  for (int i = 0; i < og.order(); ++i) {
    out << "  o" << i << (og.periodic[i] ? " (periodic):" : ":");
    for (int v : og.members[i]) out << ' ' << tq.q.vertex_name(v);
    out << '\n';
  }
  for (const auto& [u, v] : og.edges) out << "  o" << u << " -- o" << v << '\n';
  for (int l : og.loops) out << "  o" << l << " -- o" << l << " (loop)\n";
  return out.str();
}

std::string export_dot(const OrbitGraph& og, const TranslationQuiver& tq) {
  std::ostringstream out;
  out << "graph \"" << (tq.name.empty() ? std::string("orbits") : tq.name + "-orbits")
      << "\" {\n";
  for (int i = 0; i < og.order(); ++i) {
    out << "  o" << i << " [label=\"";
    for (std::size_t k = 0; k < og.members[i].size(); ++k)
      out << (k ? "," : "") << tq.q.vertex_name(og.members[i][k]);
    out << '"';
    if (og.periodic[i]) out << ", shape=doublecircle";
    out << "];\n";
  }
  for (const auto& [u, v] : og.edges) out << "  o" << u << " -- o" << v << ";\n";
  for (int l : og.loops) out << "  o" << l << " -- o" << l << ";\n";
  out << "}\n";
  return out.str();
}

Pi1Rank pi1_rank(const TranslationQuiver& tq) {
  const Quiver& Q = tq.q;
  const int nv = Q.num_vertices();
  if (nv == 0) throw DomainError("Disconnected", "empty translation quiver");
  UnionFind cc(nv);
  for (int a = 0; a < Q.num_arrows(); ++a) cc.unite(Q.arrow(a).src, Q.arrow(a).dst);
  for (const auto& [z, w] : tq.tau) cc.unite(z, w);
  for (int v = 0; v < nv; ++v)
    if (cc.find(v) != cc.find(0))
      throw DomainError("Disconnected",
                        "translation quiver splits at vertex " + Q.vertex_name(v));

  OrbitData d = build_orbit_graph(tq);
  Pi1Rank r;
  r.rank_h = d.og.size() - d.og.order() + 1;
  r.rank_generic =
      d.generic_edges + static_cast<int>(d.og.loops.size()) - d.og.order() + 1;
  r.is_tree = r.rank_h == 0 && d.og.loops.empty();
  return r;
}

TQCoveringMorphism voltage_cover_tq(const TranslationQuiver& base,
                                    const std::map<std::string, long>& voltage,
                                    const std::string& group, int window) {
  const Quiver& Q = base.q;
  std::map<int, int> sigma = validate_translation_quiver(base);

  long n = 0;  // 0 = the free group Z, otherwise the cyclic order
  if (group == "Z") {
    if (window < 1) throw DomainError("BadGroup", "Z cover needs a positive window");
  } else if (group.rfind("Z/", 0) == 0) {
    try {
      n = std::stol(group.substr(2));
    } catch (...) {
      n = 0;
    }
    if (n < 1) throw DomainError("BadGroup", "cannot read cyclic order in '" + group + "'");
  } else {
    throw DomainError("BadGroup", "group must be Z or Z/n, got '" + group + "'");
  }
  const int layers = n ? static_cast<int>(n) : window;

  std::vector<long> volt(Q.num_arrows(), 0);
  for (const auto& [aname, g] : voltage) volt[Q.arrow_id(aname)] = g;
  auto reduce = [&](long g) { return n ? ((g % n) + n) % n : g; };

  // tau lifts only when every path tau z -> y -> z of the mesh at z carries
  // one and the same total voltage w_z.
  std::map<int, long> w;
  for (const auto& [a, b] : sigma) {
    int z = Q.arrow(a).dst;
    long wz = reduce(volt[a] + volt[b]);
    auto [it, fresh] = w.emplace(z, wz);
    if (!fresh && it->second != wz)
      throw DomainError("UnbalancedMesh", "mesh at '" + Q.vertex_name(z) +
                                              "' carries two different voltages");
  }

  TQCoveringMorphism pi;
  pi.base = base;
  pi.group = group;
  pi.total.name = (base.name.empty() ? std::string("cover") : base.name) + "@" + group;

  const int nv = Q.num_vertices();
  const int na = Q.num_arrows();
  auto vid = [&](int x, long g) { return static_cast<int>(g) * nv + x; };
  for (int g = 0; g < layers; ++g)
    for (int x = 0; x < nv; ++x) {
      pi.total.add_vertex(Q.vertex_name(x) + "@" + std::to_string(g),
                          base.is_projective(x), base.is_injective(x),
                          base.is_boundary(x));
      pi.vertex_map.push_back(x);
    }

  // Arrow lifts: the lift of a: y -> z at layer g runs (y,g) -> (z, g+v(a)).
  std::map<std::pair<int, int>, int> lift;  // (base arrow, source layer) -> id
  for (int g = 0; g < layers; ++g)
    for (int a = 0; a < na; ++a) {
      const Arrow& ar = Q.arrow(a);
      long tg = reduce(g + volt[a]);
      if (!n && (tg < 0 || tg >= layers)) continue;
      int id = pi.total.q.add_arrow(ar.name + "@" + std::to_string(g), vid(ar.src, g),
                                    vid(ar.dst, tg));
      lift[{a, g}] = id;
      pi.arrow_map.push_back(a);
    }

  // Translation: tau(z, h) = (tau z, h - w_z), with the polarization lifted
  // alongside so that meshes close up layer by layer. Over Z a lift is
  // interior only when its whole star -- arrows in, arrows out and the
  // translate -- fits inside the window; anything else joins the rim.
  for (int g = 0; g < layers; ++g)
    for (int x = 0; x < nv; ++x) {
      if (base.is_boundary(x)) continue;  // the lift stays boundary
      long wz = w.count(x) ? w.at(x) : 0;
      long tg = reduce(g - wz);
      bool interior = true;
      if (!n) {
        for (int a : Q.arrows_into(x))
          if (g - volt[a] < 0 || g - volt[a] >= layers) interior = false;
        for (int a : Q.arrows_from(x))
          if (g + volt[a] < 0 || g + volt[a] >= layers) interior = false;
        if (!base.is_projective(x) && (tg < 0 || tg >= layers)) interior = false;
      }
      if (!interior) {
        pi.total.boundary[vid(x, g)] = 1;
        continue;
      }
      if (base.is_projective(x)) continue;
      pi.total.tau[vid(x, g)] = vid(*base.tau_of(x), tg);
      for (int a : Q.arrows_into(x)) {
        long sg = reduce(g - volt[a]);
        pi.total.sigma[lift.at({a, static_cast<int>(sg)})] =
            lift.at({sigma.at(a), static_cast<int>(tg)});
      }
    }

  if (n) {  // deck generator: shift every layer by one
    DeckAction d;
    d.vertex_perm.resize(pi.total.q.num_vertices());
    for (int g = 0; g < layers; ++g)
      for (int x = 0; x < nv; ++x)
        d.vertex_perm[vid(x, g)] = vid(x, (g + 1) % n);
    d.arrow_perm.resize(pi.total.q.num_arrows());
    for (const auto& [key, id] : lift)
      d.arrow_perm[id] = lift.at({key.first, static_cast<int>((key.second + 1) % n)});
    pi.deck = std::move(d);
  }
  return pi;
}

namespace {

void check_tq_automorphism(const TranslationQuiver& t, const DeckAction& gen) {
  const Quiver& Q = t.q;
  const int nv = Q.num_vertices();
  const int na = Q.num_arrows();
  auto is_perm = [](const std::vector<int>& p, int m) {
    if (static_cast<int>(p.size()) != m) return false;
    std::vector<char> hit(m, 0);
    for (int x : p) {
      if (x < 0 || x >= m || hit[x]) return false;
      hit[x] = 1;
    }
    return true;
  };
  if (!is_perm(gen.vertex_perm, nv) || !is_perm(gen.arrow_perm, na))
    throw DomainError("BrokenLift", "deck generator is not a permutation");
  for (int a = 0; a < na; ++a) {
    const Arrow& x = Q.arrow(a);
    const Arrow& y = Q.arrow(gen.arrow_perm[a]);
    if (y.src != gen.vertex_perm[x.src] || y.dst != gen.vertex_perm[x.dst])
      throw DomainError("BrokenLift", "deck generator breaks arrow '" + x.name + "'");
  }
  for (int v = 0; v < nv; ++v) {
    int w = gen.vertex_perm[v];
    if (t.is_projective(v) != t.is_projective(w) ||
        t.is_injective(v) != t.is_injective(w) || t.is_boundary(v) != t.is_boundary(w))
      throw DomainError("BrokenLift",
                        "deck generator breaks flags at '" + Q.vertex_name(v) + "'");
    auto tv = t.tau_of(v);
    auto tw = t.tau_of(w);
    if (tv.has_value() != tw.has_value() || (tv && gen.vertex_perm[*tv] != *tw))
      throw DomainError("BrokenLift",
                        "deck generator breaks tau at '" + Q.vertex_name(v) + "'");
  }
}

// Common length of all vertex cycles of the generator; unequal lengths mean
// the action of the cyclic group it generates is not free.
int free_order(const TranslationQuiver& t, const DeckAction& gen) {
  const int nv = t.q.num_vertices();
  int order = -1;
  std::vector<char> seen(nv, 0);
  for (int v = 0; v < nv; ++v) {
    if (seen[v]) continue;
    int len = 0, x = v;
    do {
      seen[x] = 1;
      x = gen.vertex_perm[x];
      ++len;
    } while (x != v);
    if (order < 0) order = len;
    if (len != order)
      throw DomainError("NotFree", "deck orbits of sizes " + std::to_string(order) +
                                       " and " + std::to_string(len));
  }
  if (order < 0) order = 1;
  // The same power must close the arrow cycles, or some power of the
  // generator would fix every vertex yet still permute parallel arrows.
  for (int a = 0; a < t.q.num_arrows(); ++a) {
    int x = a;
    for (int k = 0; k < order; ++k) x = gen.arrow_perm[x];
    if (x != a)
      throw DomainError("NotFree", "generator order on arrows exceeds its order on vertices");
  }
  return order;
}

}  // namespace

TranslationQuiver quotient_tq(const TranslationQuiver& total, const DeckAction& gen) {
  check_tq_automorphism(total, gen);
  free_order(total, gen);
  const Quiver& Q = total.q;
  const int nv = Q.num_vertices();
  const int na = Q.num_arrows();

  std::vector<int> vrep(nv, -1), arep(na, -1);  // smallest orbit member
  for (int v = 0; v < nv; ++v) {
    if (vrep[v] >= 0) continue;
    int x = v;
    do {
      vrep[x] = v;
      x = gen.vertex_perm[x];
    } while (x != v);
  }
  for (int a = 0; a < na; ++a) {
    if (arep[a] >= 0) continue;
    int x = a;
    do {
      arep[x] = a;
      x = gen.arrow_perm[x];
    } while (x != a);
  }

  TranslationQuiver q;
  q.name = total.name.empty() ? std::string("quotient") : total.name + "-quotient";
  std::map<int, int> vq, aq;
  for (int v = 0; v < nv; ++v)
    if (vrep[v] == v)
      vq[v] = q.add_vertex(Q.vertex_name(v), total.is_projective(v),
                           total.is_injective(v), total.is_boundary(v));
  for (int a = 0; a < na; ++a)
    if (arep[a] == a) {
      const Arrow& ar = Q.arrow(a);
      aq[a] = q.q.add_arrow(ar.name, vq.at(vrep[ar.src]), vq.at(vrep[ar.dst]));
    }
  for (const auto& [z, t] : total.tau)
    if (vrep[z] == z) q.tau[vq.at(z)] = vq.at(vrep[t]);
  for (const auto& [a, b] : total.sigma) {
    auto [it, fresh] = q.sigma.emplace(aq.at(arep[a]), aq.at(arep[b]));
    if (!fresh && it->second != aq.at(arep[b]))
      throw DomainError("BrokenLift", "polarization does not descend to the quotient");
  }
  return q;
}

TQCoverReport verify_tq_covering(const TQCoveringMorphism& pi) {
  const TranslationQuiver& T = pi.total;
  const TranslationQuiver& B = pi.base;
  validate_translation_quiver(T);
  validate_translation_quiver(B);
  const int tv = T.q.num_vertices();
  const int ta = T.q.num_arrows();
  const int bv = B.q.num_vertices();
  const int ba = B.q.num_arrows();

  if (static_cast<int>(pi.vertex_map.size()) != tv ||
      static_cast<int>(pi.arrow_map.size()) != ta)
    throw DomainError("BrokenLift", "covering maps do not match the total quiver");
  for (int v = 0; v < tv; ++v)
    if (pi.vertex_map[v] < 0 || pi.vertex_map[v] >= bv)
      throw DomainError("BrokenLift", "vertex image out of range");
  for (int a = 0; a < ta; ++a) {
    int im = pi.arrow_map[a];
    if (im < 0 || im >= ba) throw DomainError("BrokenLift", "arrow image out of range");
    const Arrow& up = T.q.arrow(a);
    const Arrow& dn = B.q.arrow(im);
    if (dn.src != pi.vertex_map[up.src] || dn.dst != pi.vertex_map[up.dst])
      throw DomainError("BrokenLift", "arrow '" + up.name + "' does not lie over '" +
                                          dn.name + "'");
  }

  TQCoverReport rep;

  // tau commutes with the projection; a cover may neither invent a translate
  // over a vertex that has none nor drop one over an interior vertex.
  for (int v = 0; v < tv; ++v) {
    auto tu = T.tau_of(v);
    auto td = B.tau_of(pi.vertex_map[v]);
    if (tu) {
      if (!td)
        throw DomainError("BrokenLift", "translate above a vertex without one");
      if (pi.vertex_map[*tu] != *td)
        throw DomainError("BrokenLift",
                          "tau does not commute at '" + T.q.vertex_name(v) + "'");
    } else if (td && !T.is_boundary(v)) {
      throw DomainError("BrokenLift", "missing translate above '" +
                                          B.q.vertex_name(pi.vertex_map[v]) + "'");
    }
  }
  rep.tau_commutes = true;

  // Local bijection: at an interior vertex the arrows in and the arrows out
  // match their base counterparts one-to-one. A collapsed mesh dies here.
  auto check_fibre = [&](const std::vector<int>& up_arrows,
                         const std::vector<int>& dn_arrows, const std::string& where) {
    std::multiset<int> got, want;
    for (int a : up_arrows) got.insert(pi.arrow_map[a]);
    want.insert(dn_arrows.begin(), dn_arrows.end());
    if (got != want) throw DomainError("BrokenLift", "arrows do not biject " + where);
  };
  for (int v = 0; v < tv; ++v) {
    if (T.is_boundary(v)) continue;
    int w = pi.vertex_map[v];
    check_fibre(T.q.arrows_into(v), B.q.arrows_into(w),
                "into '" + T.q.vertex_name(v) + "'");
    check_fibre(T.q.arrows_from(v), B.q.arrows_from(w),
                "out of '" + T.q.vertex_name(v) + "'");
  }
  rep.local_bijection = true;

  {
    std::vector<char> hv(bv, 0), ha(ba, 0);
    for (int v = 0; v < tv; ++v) hv[pi.vertex_map[v]] = 1;
    for (int a = 0; a < ta; ++a) ha[pi.arrow_map[a]] = 1;
    rep.surjective = std::count(hv.begin(), hv.end(), 0) == 0 &&
                     std::count(ha.begin(), ha.end(), 0) == 0;
    if (!rep.surjective) rep.notes.push_back("projection misses part of the base");
  }
  {
    std::vector<int> card(bv, 0);
    for (int v = 0; v < tv; ++v) ++card[pi.vertex_map[v]];
    rep.fibre_size = bv ? card[0] : 0;
    for (int c : card)
      if (c != rep.fibre_size) {
        rep.fibre_size = 0;
        rep.notes.push_back("fibre sizes vary");
        break;
      }
  }

  if (!pi.deck) {
    rep.notes.push_back("no deck generator attached; Galois certificate skipped");
    return rep;
  }
  const DeckAction& gen = *pi.deck;
  check_tq_automorphism(T, gen);
  int order = free_order(T, gen);
  rep.deck_free = true;

  // Fibres = orbits: the generator preserves fibres, and freeness gives all
  // orbits the group's size, so equality holds exactly when every fibre has
  // that many elements.
  bool fo = true;
  for (int v = 0; v < tv && fo; ++v)
    if (pi.vertex_map[gen.vertex_perm[v]] != pi.vertex_map[v]) fo = false;
  for (int a = 0; a < ta && fo; ++a)
    if (pi.arrow_map[gen.arrow_perm[a]] != pi.arrow_map[a]) fo = false;
  if (fo) {
    std::vector<int> card(bv, 0), acard(ba, 0);
    for (int v = 0; v < tv; ++v) ++card[pi.vertex_map[v]];
    for (int a = 0; a < ta; ++a) ++acard[pi.arrow_map[a]];
    for (int c : card)
      if (c != order) fo = false;
    for (int c : acard)
      if (c != order) fo = false;
  }
  rep.fibres_are_orbits = fo;
  if (!fo) rep.notes.push_back("deck orbits do not match the fibres");

  try {
    rep.quotient_matches = tq_isomorphic(quotient_tq(T, gen), B);
    if (!rep.quotient_matches)
      rep.notes.push_back("quotient by the deck is not isomorphic to the base");
  } catch (const DomainError& e) {
    rep.quotient_matches = false;
    rep.notes.push_back(std::string("quotient failed: ") + e.what());
  }
  rep.galois = rep.deck_free && rep.fibres_are_orbits && rep.quotient_matches;
  return rep;
}

bool tq_isomorphic(const TranslationQuiver& A, const TranslationQuiver& B) {
  const int n = A.q.num_vertices();
  if (n != B.q.num_vertices() || A.q.num_arrows() != B.q.num_arrows()) return false;
  if (A.tau.size() != B.tau.size()) return false;

  using Inv = std::tuple<int, int, int, int, int, int, int>;
  auto inv = [](const TranslationQuiver& t, int v) {
    return Inv(t.is_projective(v), t.is_injective(v), t.is_boundary(v),
               static_cast<int>(t.q.arrows_into(v).size()),
               static_cast<int>(t.q.arrows_from(v).size()),
               t.tau_of(v).has_value() ? 1 : 0, t.tau_inv_of(v).has_value() ? 1 : 0);
  };
  std::vector<Inv> ia(n), ib(n);
  for (int v = 0; v < n; ++v) {
    ia[v] = inv(A, v);
    ib[v] = inv(B, v);
  }
  {
    auto sa = ia, sb = ib;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return false;
  }

  auto multi = [](const TranslationQuiver& t) {
    std::map<std::pair<int, int>, int> m;
    for (const auto& ar : t.q.arrows()) ++m[{ar.src, ar.dst}];
    return m;
  };
  auto ma = multi(A), mb = multi(B);
  auto cnt = [](const std::map<std::pair<int, int>, int>& m, int x, int y) {
    auto it = m.find({x, y});
    return it == m.end() ? 0 : it->second;
  };

  // Rarest invariant classes first keeps the search shallow.
  std::map<Inv, int> freq;
  for (const auto& x : ib) ++freq[x];
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int x, int y) {
    if (freq[ia[x]] != freq[ia[y]]) return freq[ia[x]] < freq[ia[y]];
    return x < y;
  });

  std::vector<int> img(n, -1);
  std::vector<char> used(n, 0);
  std::function<bool(int)> place = [&](int k) -> bool {
    if (k == n) return true;
    int v = order[k];
    for (int w = 0; w < n; ++w) {
      if (used[w] || !(ia[v] == ib[w])) continue;
      bool ok = true;
      for (int j = 0; j < k && ok; ++j) {
        int u = order[j];
        if (cnt(ma, v, u) != cnt(mb, w, img[u]) || cnt(ma, u, v) != cnt(mb, img[u], w))
          ok = false;
      }
      if (ok) {
        auto tv = A.tau_of(v);
        if (tv && img[*tv] >= 0) ok = B.tau_of(w) == std::optional<int>(img[*tv]);
      }
      if (ok)
        for (const auto& [z, t] : A.tau) {
          if (t != v || img[z] < 0) continue;
          if (B.tau_of(img[z]) != std::optional<int>(w)) {
            ok = false;
            break;
          }
        }
      if (!ok) continue;
      img[v] = w;
      used[w] = 1;
      if (place(k + 1)) return true;
      img[v] = -1;
      used[w] = 0;
    }
    return false;
  };
  return place(0);
}

}  // namespace qw
