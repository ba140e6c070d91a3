#include <doctest.h>

#include "quiverworks/textio.hpp"
#include "quiverworks/translation_quiver.hpp"

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

}  // namespace

TEST_CASE("the three-vertex translation quiver validates and pairs its arrows") {
  TranslationQuiver tq = load_tq("a2.tq");
  std::map<int, int> sigma = validate_translation_quiver(tq);
  int u = tq.q.arrow_id("u"), v = tq.q.arrow_id("v");
  REQUIRE(sigma.size() == 1);
  CHECK(sigma.at(v) == u);
  CHECK(tq.tau_of(tq.q.vertex("c")) == tq.q.vertex("a"));
  CHECK(tq.tau_inv_of(tq.q.vertex("a")) == tq.q.vertex("c"));
  CHECK(!tq.tau_of(tq.q.vertex("a")).has_value());

  Field f;
  LinComb mesh = mesh_relation(tq, f, sigma, tq.q.vertex("c"));
  CHECK(mesh.str(tq.q) == "v*u");

  // Hom dimensions in the mesh category: the composite a -> b -> c is a mesh.
  MeshCategory k(tq, f);
  int a = tq.q.vertex("a"), b = tq.q.vertex("b"), c = tq.q.vertex("c");
  CHECK(k.dim(a, b, 1) == 1);
  CHECK(k.dim(b, c, 1) == 1);
  CHECK(k.dim(a, c, 2) == 0);
  CHECK(k.dim(a, a, 0) == 1);
  CHECK(k.total_dim(a, b) == 1);
  CHECK(k.total_dim(a, c) == 0);
}

TEST_CASE("validation rejects malformed translation data") {
  // Missing tau on an interior non-projective vertex.
  {
    TranslationQuiver tq;
    tq.add_vertex("a", true);
    tq.add_vertex("b");
    tq.add_arrow("u", "a", "b");
    CHECK_THROWS_AS(validate_translation_quiver(tq), DomainError);
  }
  // tau defined on a projective vertex.
  {
    TranslationQuiver tq;
    tq.add_vertex("a", true);
    tq.add_vertex("b", true);
    tq.add_arrow("u", "a", "b");
    tq.tau[1] = 0;
    CHECK_THROWS_AS(validate_translation_quiver(tq), DomainError);
  }
  // tau landing on an injective vertex.
  {
    TranslationQuiver tq;
    tq.add_vertex("a", true, true);
    tq.add_vertex("b");
    tq.add_arrow("u", "a", "b");
    tq.tau[1] = 0;
    CHECK_THROWS_AS(validate_translation_quiver(tq), DomainError);
  }
  // Mesh mismatch: two arrows in, one arrow out of the translate.
  {
    TranslationQuiver tq;
    tq.add_vertex("a", true);
    tq.add_vertex("b", true);
    tq.add_vertex("c");
    tq.add_arrow("u", "a", "b");
    tq.add_arrow("x1", "b", "c");
    tq.add_arrow("x2", "b", "c");
    tq.tau[2] = 0;
    CHECK_THROWS_AS(validate_translation_quiver(tq), DomainError);
  }
  // sigma pointing at an arrow with the wrong endpoints.
  {
    TranslationQuiver tq;
    tq.add_vertex("a", true);
    tq.add_vertex("b", true);
    tq.add_vertex("c");
    tq.add_arrow("u", "a", "b");
    tq.add_arrow("x", "b", "c");
    tq.tau[2] = 0;
    tq.sigma[tq.q.arrow_id("x")] = tq.q.arrow_id("x");
    CHECK_THROWS_AS(validate_translation_quiver(tq), DomainError);
  }
}

TEST_CASE("mesh category of the doubled-arrow window matches Hom dimensions") {
  TranslationQuiver tq = load_tq("kronecker_window.tq");
  Field f;
  MeshCategory k(tq, f);
  int p2 = tq.q.vertex("p2"), p1 = tq.q.vertex("p1");
  int q2 = tq.q.vertex("q2"), q1 = tq.q.vertex("q1");

  // Within the window these are Hom spaces between postprojectives: for a
  // projective source, Hom(P_v, M) has the dimension of M at v.
  CHECK(k.dim(p2, p1, 1) == 2);
  CHECK(k.dim(p2, q2, 2) == 3);
  CHECK(k.dim(p2, q1, 3) == 4);
  CHECK(k.dim(p1, q2, 1) == 2);
  CHECK(k.dim(p1, q1, 2) == 3);
  CHECK(k.total_dim(p2, q1) == 4);
  CHECK(k.total_dim(q1, p2) == 0);

  // Re-polarizing (overriding sigma on one mesh) must not change dimensions.
  TranslationQuiver flipped = tq;
  flipped.sigma[tq.q.arrow_id("w1")] = tq.q.arrow_id("v2");
  MeshCategory k2(flipped, f);
  CHECK(k2.dim(p2, q1, 3) == 4);
  CHECK(k2.dim(p2, q2, 2) == 3);
  CHECK(k2.dim(p1, q1, 2) == 3);

  // Marking the last slice as boundary drops its mesh: one more dimension
  // survives in degree 2 from p1 and two more in degree 3 from p2.
  TranslationQuiver open = tq;
  open.boundary[q1] = 1;
  open.tau.erase(q1);
  MeshCategory k3(open, f);
  CHECK(k3.dim(p1, q1, 2) == 4);
  CHECK(k3.dim(p2, q1, 3) == 6);
}

TEST_CASE("dot export mentions every vertex") {
  TranslationQuiver tq = load_tq("a2.tq");
  std::string dot = export_dot(tq);
  CHECK(dot.find("digraph") != std::string::npos);
  for (int v = 0; v < tq.q.num_vertices(); ++v)
    CHECK(dot.find(tq.q.vertex_name(v)) != std::string::npos);
}
