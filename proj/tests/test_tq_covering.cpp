#include <doctest.h>

#include <algorithm>

#include "quiverworks/textio.hpp"
#include "quiverworks/tq_covering.hpp"

using namespace qw;

namespace {

std::string fixture(const std::string& name) {
  return std::string(FIXTURE_DIR) + "/" + name;
}

TranslationQuiver load_tq(const std::string& name) {
  Fixture fx = load_fixture(fixture(name));
  REQUIRE(fx.kind == Fixture::Kind::tq);
  return fx.tq;
}

// The thrown code, or "" if the call returns normally.
template <class F>
std::string code_of(F&& f) {
  try {
    f();
  } catch (const DomainError& e) {
    return e.code;
  }
  return "";
}

// Undirected edge by vertex names of the underlying translation quiver.
std::pair<int, int> edge(const OrbitGraph& og, const TranslationQuiver& tq,
                         const std::string& a, const std::string& b) {
  int u = og.orbit_of(tq.q.vertex(a));
  int v = og.orbit_of(tq.q.vertex(b));
  return {std::min(u, v), std::max(u, v)};
}

}  // namespace

TEST_CASE("orbit graph of the one-arrow AR quiver is a tree") {
  TranslationQuiver tq = load_tq("a2.tq");
  OrbitGraph og = orbit_graph(tq);
  REQUIRE(og.order() == 2);
  CHECK(og.orbit_of(tq.q.vertex("a")) == og.orbit_of(tq.q.vertex("c")));
  CHECK(og.orbit_of(tq.q.vertex("b")) != og.orbit_of(tq.q.vertex("a")));
  CHECK(og.loops.empty());
  CHECK(og.periodic == std::vector<char>({0, 0}));
  REQUIRE(og.edges.size() == 1);
  CHECK(og.edges[0] == edge(og, tq, "a", "b"));

  Pi1Rank r = pi1_rank(tq);
  CHECK(r.rank_h == 0);
  CHECK(r.rank_generic == 0);
  CHECK(r.is_tree);
}

TEST_CASE("kronecker slices: two parallel strands, generically one") {
  TranslationQuiver tq = load_tq("kronecker_window.tq");
  OrbitGraph og = orbit_graph(tq);
  REQUIRE(og.order() == 2);
  // Both tau-orbits are non-periodic window threads.
  CHECK(og.orbit_of(tq.q.vertex("p2")) == og.orbit_of(tq.q.vertex("q2")));
  CHECK(og.orbit_of(tq.q.vertex("p1")) == og.orbit_of(tq.q.vertex("q1")));
  CHECK(og.loops.empty());
  // The u/v/w strands close into two sigma-orbits: a double edge.
  std::vector<std::pair<int, int>> want = {edge(og, tq, "p2", "p1"),
                                           edge(og, tq, "p2", "p1")};
  CHECK(og.edge_multiset() == want);

  Pi1Rank r = pi1_rank(tq);
  CHECK(r.rank_h == 1);
  CHECK(r.rank_generic == 0);  // the strands are parallel arrows throughout
  CHECK(!r.is_tree);
}

TEST_CASE("orbit graph of the component window") {
  TranslationQuiver tq = load_tq("radsq5_window.tq");
  OrbitGraph og = orbit_graph(tq);

  // Six classes: upper-left ray, the long lower thread, upper-right ray,
  // {P3,I3}, {P2,I4} and the periodic pocket.
  REQUIRE(og.order() == 6);
  int A = og.orbit_of(tq.q.vertex("I5"));
  int B = og.orbit_of(tq.q.vertex("S4"));
  int C = og.orbit_of(tq.q.vertex("P1"));
  int D = og.orbit_of(tq.q.vertex("P3"));
  int E = og.orbit_of(tq.q.vertex("P2"));
  int W = og.orbit_of(tq.q.vertex("S3"));
  CHECK(og.orbit_of(tq.q.vertex("rim1")) == A);
  CHECK(og.orbit_of(tq.q.vertex("rim2")) == B);
  CHECK(og.orbit_of(tq.q.vertex("x3")) == B);
  CHECK(og.orbit_of(tq.q.vertex("x2")) == C);
  CHECK(og.orbit_of(tq.q.vertex("I3")) == D);
  CHECK(og.orbit_of(tq.q.vertex("I4")) == E);
  CHECK(og.orbit_of(tq.q.vertex("m")) == W);
  CHECK(og.members[B].size() == 7);
  for (int i = 0; i < og.order(); ++i) CHECK(og.periodic[i] == (i == W));
  CHECK(og.loops == std::vector<int>{W});

  // Double edges along both rays, a chain through the pocket junction.
  auto norm = [](std::vector<std::pair<int, int>> v) {
    std::sort(v.begin(), v.end());
    return v;
  };
  std::vector<std::pair<int, int>> want =
      norm({edge(og, tq, "I5", "S4"), edge(og, tq, "I5", "S4"),
            edge(og, tq, "S2", "P1"), edge(og, tq, "S2", "P1"),
            edge(og, tq, "S4", "P3"), edge(og, tq, "P3", "S3"),
            edge(og, tq, "P2", "S3")});
  CHECK(og.edges == want);

  Pi1Rank r = pi1_rank(tq);
  CHECK(r.rank_h == 3);
  CHECK(!r.is_tree);
  CHECK(r.rank_generic == 1);  // ray doubles merge, pocket loop survives

  // Dropping the explicit polarization falls back to pairing parallel
  // strands in input order, which is the same pairing.
  TranslationQuiver bare = tq;
  bare.sigma.clear();
  OrbitGraph og2 = orbit_graph(bare);
  CHECK(og2.members == og.members);
  CHECK(og2.edges == og.edges);
  CHECK(og2.loops == og.loops);
}

TEST_CASE("stable AR quiver of selfinj10: loop on the periodic component") {
  TranslationQuiver tq = load_tq("riedtmann.tq");
  OrbitGraph og = orbit_graph(tq);

  REQUIRE(og.order() == 3);
  int W = og.orbit_of(tq.q.vertex("a1"));
  int X = og.orbit_of(tq.q.vertex("px"));
  int Y = og.orbit_of(tq.q.vertex("py"));
  CHECK(og.members[W].size() == 18);  // all six period-three orbits knit up
  CHECK(og.periodic[W]);
  CHECK(!og.periodic[X]);
  CHECK(!og.periodic[Y]);
  CHECK(og.loops == std::vector<int>{W});
  auto sorted = og.edges;
  std::sort(sorted.begin(), sorted.end());
  std::vector<std::pair<int, int>> want = {edge(og, tq, "a1", "px"),
                                           edge(og, tq, "a1", "py")};
  std::sort(want.begin(), want.end());
  CHECK(sorted == want);

  Pi1Rank r = pi1_rank(tq);
  CHECK(r.rank_h == 1);
  CHECK(r.rank_generic == 1);
  CHECK(!r.is_tree);

  std::string dot = export_dot(og, tq);
  CHECK(dot.find("o" + std::to_string(W) + " -- o" + std::to_string(W)) !=
        std::string::npos);
}

TEST_CASE("voltages must balance the meshes and name a cyclic group") {
  TranslationQuiver tq = load_tq("kronecker_window.tq");
  CHECK(code_of([&] { voltage_cover_tq(tq, {{"u2", 1}}, "Z/2"); }) == "UnbalancedMesh");
  CHECK(code_of([&] { voltage_cover_tq(tq, {}, "D4"); }) == "BadGroup");
  CHECK(code_of([&] { voltage_cover_tq(tq, {}, "Z/0"); }) == "BadGroup");
  CHECK(code_of([&] { voltage_cover_tq(tq, {}, "Z", 0); }) == "BadGroup");
  CHECK(code_of([&] { voltage_cover_tq(tq, {{"nope", 1}}, "Z/2"); }) == "UnknownArrow");
  // Raising the same voltage on both strands balances: u and its partner v
  // sit in different meshes, so w(q2) = 1 uniformly.
  CHECK(code_of([&] { voltage_cover_tq(tq, {{"u1", 1}, {"u2", 1}}, "Z/2"); }) == "");
}

TEST_CASE("a flat voltage doubles the quiver into two disjoint sheets") {
  TranslationQuiver tq = load_tq("a2.tq");
  TQCoveringMorphism pi = voltage_cover_tq(tq, {}, "Z/2");
  CHECK(pi.total.q.num_vertices() == 6);
  CHECK(pi.total.q.num_arrows() == 4);
  REQUIRE(pi.deck.has_value());

  TQCoverReport rep = verify_tq_covering(pi);
  CHECK(rep.ok());
  CHECK(rep.fibre_size == 2);
  CHECK(rep.galois);

  // Two sheets: not connected, so the rank question is refused.
  CHECK(code_of([&] { pi1_rank(pi.total); }) == "Disconnected");
  CHECK(tq_isomorphic(quotient_tq(pi.total, *pi.deck), tq));
}

TEST_CASE("order-two cover of the component window") {
  Fixture fx = load_fixture(fixture("radsq5_window_z2.cov"));
  REQUIRE(fx.kind == Fixture::Kind::cover);
  REQUIRE(fx.cover.group == "Z/2");
  TranslationQuiver base = load_fixture(fx.dir + "/" + fx.cover.base_file).tq;

  TQCoveringMorphism pi = voltage_cover_tq(base, fx.cover.voltage, fx.cover.group);
  CHECK(pi.total.q.num_vertices() == 34);
  TQCoverReport rep = verify_tq_covering(pi);
  CHECK(rep.ok());
  CHECK(rep.fibre_size == 2);
  CHECK(rep.galois);
  CHECK(tq_isomorphic(quotient_tq(pi.total, *pi.deck), base));

  // The period-two pocket unrolls into one tau-period-four cycle upstairs:
  // S3@0 -> m@1 -> S3@1 -> m@0 -> S3@0.
  const Quiver& Q = pi.total.q;
  int s0 = Q.vertex("S3@0");
  int x = s0;
  std::vector<std::string> ring;
  for (int k = 0; k < 4; ++k) {
    x = pi.total.tau_of(x).value();
    ring.push_back(Q.vertex_name(x));
  }
  CHECK(ring == std::vector<std::string>({"m@1", "S3@1", "m@0", "S3@0"}));

  // Connected double cover of a rank-3 graph: the cycle rank upstairs obeys
  // the index formula 2*(3-1)+1.
  OrbitGraph og = orbit_graph(pi.total);
  CHECK(og.order() == 11);
  CHECK(og.loops.size() == 1);
  Pi1Rank r = pi1_rank(pi.total);
  CHECK(r.rank_h == 5);
}

TEST_CASE("windowed free-group cover of the kronecker slices") {
  TranslationQuiver tq = load_tq("kronecker_window.tq");
  TQCoveringMorphism pi = voltage_cover_tq(tq, {{"u1", 1}, {"u2", 1}}, "Z", 3);
  CHECK(pi.total.q.num_vertices() == 12);
  CHECK(pi.total.q.num_arrows() == 16);  // two u-lifts fall off the window
  CHECK(!pi.deck.has_value());

  // The voltage shears the window: q2@0 loses its translate, p1@0 its
  // arrows in, p2@2 its arrows out. Everything else keeps its full star.
  int rim = 0;
  for (int v = 0; v < pi.total.q.num_vertices(); ++v) rim += pi.total.is_boundary(v);
  CHECK(rim == 3);
  CHECK(pi.total.is_boundary(pi.total.q.vertex("q2@0")));
  CHECK(pi.total.is_boundary(pi.total.q.vertex("p1@0")));
  CHECK(pi.total.is_boundary(pi.total.q.vertex("p2@2")));
  CHECK(pi.total.tau_of(pi.total.q.vertex("q2@1")) ==
        pi.total.q.vertex("p2@0"));
  CHECK(pi.total.tau_of(pi.total.q.vertex("q1@1")) ==
        pi.total.q.vertex("p1@1"));

  TQCoverReport rep = verify_tq_covering(pi);
  CHECK(rep.ok());
  CHECK(rep.fibre_size == 3);
  CHECK(!rep.galois);  // no deck generator on a window
}

TEST_CASE("broken coverings and non-free actions are rejected") {
  TranslationQuiver tq = load_tq("kronecker_window.tq");
  TQCoveringMorphism pi = voltage_cover_tq(tq, {}, "Z/2");

  // Collapse the mesh at q2@0: both strands sent to the same base arrow.
  {
    TQCoveringMorphism bad = pi;
    bad.arrow_map[bad.total.q.arrow_id("v2@0")] = tq.q.arrow_id("v1");
    CHECK(code_of([&] { verify_tq_covering(bad); }) == "BrokenLift");
  }
  // An arrow sent over the wrong base arrow.
  {
    TQCoveringMorphism bad = pi;
    bad.arrow_map[bad.total.q.arrow_id("w1@0")] = tq.q.arrow_id("u1");
    CHECK(code_of([&] { verify_tq_covering(bad); }) == "BrokenLift");
  }
  // A deck generator that is no automorphism.
  {
    TQCoveringMorphism bad = pi;
    std::swap(bad.deck->arrow_perm[bad.total.q.arrow_id("u1@0")],
              bad.deck->arrow_perm[bad.total.q.arrow_id("v1@0")]);
    CHECK(code_of([&] { verify_tq_covering(bad); }) == "BrokenLift");
  }

  // An automorphism with unequal orbit sizes: swap two sheets of a triple
  // cover and fix the third.
  TranslationQuiver a2 = load_tq("a2.tq");
  TQCoveringMorphism triple = voltage_cover_tq(a2, {}, "Z/3");
  const Quiver& Q = triple.total.q;
  DeckAction gen;
  gen.vertex_perm.resize(Q.num_vertices());
  gen.arrow_perm.resize(Q.num_arrows());
  auto sheet_of = [](const std::string& n) { return n.substr(n.find('@') + 1); };
  auto swap01 = [&](const std::string& n) {
    std::string stem = n.substr(0, n.find('@') + 1);
    std::string g = sheet_of(n);
    return stem + (g == "0" ? "1" : g == "1" ? "0" : g);
  };
  for (int v = 0; v < Q.num_vertices(); ++v)
    gen.vertex_perm[v] = Q.vertex(swap01(Q.vertex_name(v)));
  for (int a = 0; a < Q.num_arrows(); ++a)
    gen.arrow_perm[a] = Q.arrow_id(swap01(Q.arrow(a).name));
  CHECK(code_of([&] { quotient_tq(triple.total, gen); }) == "NotFree");
}

TEST_CASE("translation quiver isomorphism respects flags, tau and multiplicity") {
  TranslationQuiver a2 = load_tq("a2.tq");
  CHECK(tq_isomorphic(a2, a2));
  CHECK(!tq_isomorphic(a2, load_tq("kronecker_window.tq")));

  // Same shape, different flags.
  TranslationQuiver flip = a2;
  flip.injective[flip.q.vertex("b")] = 0;
  CHECK(!tq_isomorphic(a2, flip));

  // Same shape up to relabeling and insertion order.
  TranslationQuiver perm;
  perm.add_vertex("z", false, true);
  perm.add_vertex("y", true, true);
  perm.add_vertex("x", true);
  perm.add_arrow("r", "y", "z");
  perm.add_arrow("s", "x", "y");
  perm.tau[perm.q.vertex("z")] = perm.q.vertex("x");
  CHECK(tq_isomorphic(a2, perm));

  // Doubling one arrow changes the multiplicity profile.
  TranslationQuiver dbl = a2;
  dbl.add_arrow("u2", "a", "b");
  CHECK(!tq_isomorphic(a2, dbl));
}
