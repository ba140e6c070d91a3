#include "quiverworks/knitting.hpp"

#include <algorithm>
#include <climits>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace qw {

namespace {

struct Knitter {
  KnitCaps caps;
  TranslationQuiver tq;
  std::vector<Representation> modules;
  std::vector<char> in_done;   // in-arrows complete (mesh emitted / radical expanded)
  std::vector<char> out_done;  // the mesh starting here was emitted (or none exists)
  long dim_used = 0;
  bool capped = false;
  std::string reason;

  int find_vertex(const Representation& r) const {
    for (int v = 0; v < tq.q.num_vertices(); ++v)
      if (modules[v].dims == r.dims && isomorphic(modules[v], r) == Verdict::yes)
        return v;
    return -1;
  }

  // Room for `nv` more modules of combined dimension `nd`? Records the stop
  // reason on the first refusal; afterwards the knit winds down untouched.
  bool room_for(int nv, long nd) {
    if (tq.q.num_vertices() + nv > caps.max_vertices) {
      capped = true;
      reason = "vertex cap";
      return false;
    }
    if (dim_used + nd > caps.max_total_dim) {
      capped = true;
      reason = "dimension cap";
      return false;
    }
    return true;
  }

  int create_vertex(Representation r, const std::string& name) {
    int v = tq.add_vertex(name, is_projective(r), is_injective(r), false);
    dim_used += r.total_dim();
    modules.push_back(std::move(r));
    in_done.push_back(0);
    out_done.push_back(tq.injective.back() ? 1 : 0);  // injectives never fire
    return v;
  }

  std::vector<int> arrow_ids(int src, int dst) const {
    std::vector<int> out;
    for (int a = 0; a < tq.q.num_arrows(); ++a)
      if (tq.q.arrow(a).src == src && tq.q.arrow(a).dst == dst) out.push_back(a);
    return out;
  }

  void add_arrows(int src, int dst, int n) {
    for (int i = 0; i < n; ++i)
      tq.add_arrow("a" + std::to_string(tq.q.num_arrows()), tq.q.vertex_name(src),
                   tq.q.vertex_name(dst));
  }

  // Matching slots for a batch of modules: an existing vertex id, or an index
  // into the list of modules planned for creation. Planning first keeps mesh
  // emission atomic under the caps.
  struct Slot {
    int vertex = -1;
    int planned = -1;
  };

  Slot locate(const Representation& r, std::vector<Representation>& planned) const {
    int v = find_vertex(r);
    if (v >= 0) return Slot{v, -1};
    for (int i = 0; i < static_cast<int>(planned.size()); ++i)
      if (planned[i].dims == r.dims && isomorphic(planned[i], r) == Verdict::yes)
        return Slot{-1, i};
    planned.push_back(r);
    return Slot{-1, static_cast<int>(planned.size()) - 1};
  }

  // Emit the mesh ending at the module `endrep` (reusing vertex `endv` when
  // >= 0): compute the almost split sequence, match or create the translate
  // and the middle summands, top the arrow multiplicities up and pair the
  // polarization. Returns false without touching anything if a cap refuses.
  bool emit_mesh(int endv, const Representation& endrep) {
    ARSequence ass = almost_split_sequence_ending_at(endrep);
    std::vector<Summand> mids = decompose(ass.middle);

    int midsum = 0;
    for (const Summand& s : mids) midsum += s.multiplicity * s.rep.total_dim();
    if (ass.tau_m.total_dim() + endrep.total_dim() != midsum)
      throw DomainError("MeshMismatch", "middle term does not add up to dim M + dim tau^-1 M");

    std::vector<Representation> planned;
    Slot end = endv >= 0 ? Slot{endv, -1} : locate(endrep, planned);
    Slot start = locate(ass.tau_m, planned);
    std::vector<Slot> mid_slots;
    for (const Summand& s : mids) mid_slots.push_back(locate(s.rep, planned));

    long nd = 0;
    for (const Representation& r : planned) nd += r.total_dim();
    if (!room_for(static_cast<int>(planned.size()), nd)) return false;

    std::vector<int> created;
    for (Representation& r : planned)
      created.push_back(create_vertex(std::move(r), "m" + std::to_string(tq.q.num_vertices())));
    auto vid = [&](const Slot& s) { return s.vertex >= 0 ? s.vertex : created[s.planned]; };

    int zv = vid(end), sv = vid(start);
    if (tq.is_projective(zv))
      throw DomainError("MeshMismatch",
                        "a translate landed on the projective '" + tq.q.vertex_name(zv) + "'");
    if (auto t = tq.tau_of(zv)) {
      if (*t != sv)
        throw DomainError("MeshMismatch", "conflicting translates of '" + tq.q.vertex_name(zv) + "'");
    } else {
      tq.tau[zv] = sv;
    }

    for (std::size_t i = 0; i < mids.size(); ++i) {
      int nv = vid(mid_slots[i]);
      int mult = mids[i].multiplicity;
      int have_out = static_cast<int>(arrow_ids(sv, nv).size());
      int have_in = static_cast<int>(arrow_ids(nv, zv).size());
      if (have_out > mult || have_in > mult)
        throw DomainError("MeshMismatch", "too many arrows already present between '" +
                                              tq.q.vertex_name(nv) + "' and '" +
                                              tq.q.vertex_name(zv) + "'");
      add_arrows(sv, nv, mult - have_out);
      add_arrows(nv, zv, mult - have_in);
      std::vector<int> outs = arrow_ids(sv, nv), ins = arrow_ids(nv, zv);
      for (int j = 0; j < mult; ++j) tq.sigma[ins[j]] = outs[j];
    }

    in_done[zv] = 1;
    out_done[sv] = 1;
    return true;
  }

  // In-arrows of v: the mesh ending there, or the radical of a projective.
  bool ensure_in(int v) {
    if (in_done[v]) return true;
    if (!tq.is_projective(v)) return emit_mesh(v, modules[v]);

    auto [rad, emb] = radical_of(modules[v]);
    (void)emb;
    if (rad.total_dim() == 0) {
      in_done[v] = 1;
      return true;
    }
    std::vector<Summand> parts = decompose(rad);
    std::vector<Representation> planned;
    std::vector<Slot> slots;
    for (const Summand& s : parts) slots.push_back(locate(s.rep, planned));
    long nd = 0;
    for (const Representation& r : planned) nd += r.total_dim();
    if (!room_for(static_cast<int>(planned.size()), nd)) return false;
    std::vector<int> created;
    for (Representation& r : planned)
      created.push_back(create_vertex(std::move(r), "m" + std::to_string(tq.q.num_vertices())));
    for (std::size_t i = 0; i < parts.size(); ++i) {
      int nv = slots[i].vertex >= 0 ? slots[i].vertex : created[slots[i].planned];
      int have = static_cast<int>(arrow_ids(nv, v).size());
      if (have > parts[i].multiplicity)
        throw DomainError("MeshMismatch", "too many arrows into the projective '" +
                                              tq.q.vertex_name(v) + "'");
      add_arrows(nv, v, parts[i].multiplicity - have);
    }
    in_done[v] = 1;
    return true;
  }

  // Out-arrows of v: ensure the mesh ending at tau^-1 v exists.
  bool ensure_out(int v) {
    if (out_done[v]) return true;
    Representation z = ar_translate_inverse(modules[v]);
    int zv = find_vertex(z);
    if (zv >= 0 && in_done[zv]) {
      auto t = tq.tau_of(zv);
      if (!t || *t != v)
        throw DomainError("MeshMismatch",
                          "translate collision at '" + tq.q.vertex_name(zv) + "'");
      out_done[v] = 1;
      return true;
    }
    if (zv >= 0) return emit_mesh(zv, modules[zv]);
    return emit_mesh(-1, z);
  }
};

}  // namespace

KnitResult knit_component(std::shared_ptr<const AlgebraBasis> alg, const KnitCaps& caps,
                          const std::vector<std::string>& seeds) {
  const Quiver& q = alg->quiver();
  std::vector<int> seed_ids;
  for (const std::string& s : seeds) seed_ids.push_back(q.vertex(s));
  if (seed_ids.empty())
    for (int v = 0; v < q.num_vertices(); ++v) seed_ids.push_back(v);
  if (seed_ids.empty())
    throw DomainError("NoSeed", "the algebra has no vertices to seed the knit from");

  Knitter k;
  k.caps = caps;
  k.tq.name = alg->presentation().name.empty() ? "knit" : alg->presentation().name + "-ar";

  std::vector<std::pair<int, int>> order;  // (total dim, vertex), smallest first
  std::map<int, Representation> projs;
  for (int v : seed_ids) {
    projs.emplace(v, projective_at(alg, v));
    order.emplace_back(projs.at(v).total_dim(), v);
  }
  std::sort(order.begin(), order.end());
  for (auto [d, v] : order) {
    if (!k.room_for(1, d)) break;
    k.create_vertex(std::move(projs.at(v)), "P_" + q.vertex_name(v));
  }

  for (int cursor = 0; cursor < k.tq.q.num_vertices() && !k.capped; ++cursor) {
    if (!k.ensure_in(cursor)) break;
    if (!k.ensure_out(cursor)) break;
  }

  KnitResult out;
  out.closed = !k.capped;
  out.stop_reason = k.capped ? k.reason : "closed";
  if (k.capped)
    for (int v = 0; v < k.tq.q.num_vertices(); ++v)
      if (!k.in_done[v] || !k.out_done[v]) k.tq.boundary[v] = 1;
  out.tq = std::move(k.tq);
  out.modules = std::move(k.modules);
  return out;
}

KnitResult knit_component(const AlgebraPresentation& pres, const KnitCaps& caps,
                          const std::vector<std::string>& seeds) {
  auto alg = std::make_shared<AlgebraBasis>(AlgebraBasis::compute(pres));
  return knit_component(std::move(alg), caps, seeds);
}

std::vector<Representation> enumerate_indecomposables(const AlgebraPresentation& pres, int cap) {
  KnitCaps caps;
  caps.max_vertices = cap;
  caps.max_total_dim = INT_MAX / 2;
  KnitResult r = knit_component(pres, caps);
  if (!r.closed)
    throw DomainError("NotRepresentationFinite",
                      "knitting is still open at " + std::to_string(cap) + " modules");
  return std::move(r.modules);
}

}  // namespace qw
