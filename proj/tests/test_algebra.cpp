#include <doctest.h>

#include <set>

#include "builders.hpp"

using namespace qw;
using namespace qwtest;

TEST_CASE("path enumeration is degree-then-lex and complete") {
  AlgebraPresentation p = kronecker();
  auto paths = enumerate_paths(p.quiver, 3);
  // Two lazy paths, two arrows, nothing longer (1 -> 2 is the only step).
  REQUIRE(paths.size() == 4);
  CHECK(paths[0].str(p.quiver) == "e_1");
  CHECK(paths[1].str(p.quiver) == "e_2");
  CHECK(paths[2].str(p.quiver) == "a");
  CHECK(paths[3].str(p.quiver) == "b");

  AlgebraPresentation l = loop_sq();
  auto loops = enumerate_paths(l.quiver, 3);
  REQUIRE(loops.size() == 4);  // e, r, rr, rrr
  CHECK(loops[3].length() == 3);
}

TEST_CASE("hereditary path algebras: dimension = #paths") {
  CHECK(AlgebraBasis::compute(a2()).dim() == 3);
  CHECK(AlgebraBasis::compute(kronecker()).dim() == 4);
}

TEST_CASE("semisimple algebra: no arrows") {
  AlgebraPresentation p;
  p.quiver.add_vertex("u");
  p.quiver.add_vertex("v");
  p.quiver.add_vertex("w");
  AlgebraBasis B = AlgebraBasis::compute(p);
  CHECK(B.dim() == 3);
  CHECK(B.radical_basis().empty());
}

TEST_CASE("loop with square zero") {
  AlgebraBasis B = AlgebraBasis::compute(loop_sq());
  CHECK(B.dim() == 2);
  CHECK(B.nil_degree() == 2);
  // r * r reduces to zero.
  CHECK(is_zero_vec(B.multiply(1, 1)));
}

TEST_CASE("loop without relations is infinite-dimensional") {
  AlgebraPresentation p;
  p.quiver.add_vertex("v");
  p.quiver.add_arrow("r", "v", "v");
  CHECK_THROWS_WITH_AS(AlgebraBasis::compute(p, 8), doctest::Contains("NotFiniteDimensional"),
                       DomainError);
}

TEST_CASE("radical-square-zero algebra on five vertices") {
  AlgebraBasis B = AlgebraBasis::compute(radsq5());
  CHECK(B.dim() == 12);  // 5 lazy paths + 7 arrows
  CHECK(B.nil_degree() == 2);
  const Quiver& Q = B.quiver();
  // e_1 A e_2 is spanned by the two parallel arrows.
  CHECK(B.pair_basis(Q.vertex("2"), Q.vertex("1")).size() == 2);
  CHECK(B.pair_basis(Q.vertex("3"), Q.vertex("1")).empty());  // killed by rad^2 = 0
}

TEST_CASE("commutative square") {
  AlgebraPresentation p;
  for (const char* v : {"1", "2", "3", "4"}) p.quiver.add_vertex(v);
  p.quiver.add_arrow("a", "1", "2");
  p.quiver.add_arrow("b", "1", "3");
  p.quiver.add_arrow("c", "2", "4");
  p.quiver.add_arrow("d", "3", "4");
  p.relations.push_back(difference_relation(p.field, p.quiver, "c*a", "d*b"));
  AlgebraBasis B = AlgebraBasis::compute(p);
  CHECK(B.dim() == 9);  // 4 + 4 + 1 (the two length-2 paths are identified)
  LinComb ca = monomial_relation(p.field, p.quiver, "c*a");
  LinComb db = monomial_relation(p.field, p.quiver, "d*b");
  CHECK(B.normal_form(ca).terms() == B.normal_form(db).terms());
  CHECK(B.in_ideal(ca - db));
  CHECK(!B.in_ideal(ca));
}

TEST_CASE("self-injective dimension-10 algebra over GF(2)") {
  AlgebraBasis B = AlgebraBasis::compute(selfinj10());
  CHECK(B.dim() == 10);
  CHECK(B.nil_degree() == 4);

  const Quiver& Q = B.quiver();
  const Field& F = B.field();
  int x = Q.vertex("x"), y = Q.vertex("y");
  CHECK(B.pair_basis(y, y).size() == 4);  // e_y, rho, rho^2, rho^3
  CHECK(B.pair_basis(y, x).size() == 2);  // sigma, sigma*rho
  CHECK(B.pair_basis(x, y).size() == 2);  // delta, rho*delta
  CHECK(B.pair_basis(x, x).size() == 2);  // e_x, sigma*delta
  // rho^2 falls together with delta*sigma (the canonical rewrite direction
  // under the degree-then-lex order replaces r*r by the lex-lower d*s) ...
  CHECK(B.normal_form(monomial_relation(F, Q, "r*r")).str(Q) == "d*s");
  CHECK(B.in_ideal(difference_relation(F, Q, "r*r", "d*s")));
  // ... and the inhomogeneous relation forces sigma*rho^2 into the ideal,
  // even though only sigma*delta = sigma*rho*delta was declared.
  CHECK(B.in_ideal(monomial_relation(F, Q, "s*r*r")));
  CHECK(B.in_ideal(monomial_relation(F, Q, "s*d*s*d")));
  CHECK(!B.in_ideal(monomial_relation(F, Q, "s*d")));
  CHECK(!B.in_ideal(monomial_relation(F, Q, "r*r*r")));
}

TEST_CASE("relation validation rejects malformed input") {
  AlgebraPresentation p = a2();
  SUBCASE("short term") {
    p.relations.push_back(monomial_relation(p.field, p.quiver, "a"));
    CHECK_THROWS_WITH_AS(AlgebraBasis::compute(p), doctest::Contains("RelationTooShort"),
                         DomainError);
  }
  SUBCASE("mixed endpoints") {
    AlgebraPresentation k = radsq5();
    LinComb bad = monomial_relation(k.field, k.quiver, "al*ga");
    bad.add(path_of(k.quiver, "de*e1"), Scalar::of(k.field, 1));
    k.relations.push_back(bad);
    CHECK_THROWS_WITH_AS(AlgebraBasis::compute(k), doctest::Contains("RelationNotUniform"),
                         DomainError);
  }
}

TEST_CASE("duplicate and unknown names are rejected") {
  Quiver q;
  q.add_vertex("1");
  CHECK_THROWS_WITH_AS(q.add_vertex("1"), doctest::Contains("DuplicateName"), DomainError);
  CHECK_THROWS_WITH_AS(q.add_arrow("a", "1", "2"), doctest::Contains("UnknownVertex"),
                       DomainError);
  CHECK_THROWS_WITH_AS(q.arrow_id("zz"), doctest::Contains("UnknownArrow"), DomainError);
}

TEST_CASE("convex restriction") {
  AlgebraPresentation p = radsq5();
  SUBCASE("two-vertex cut is the Kronecker algebra") {
    AlgebraPresentation r = restrict_to_convex(p, {"1", "2"});
    CHECK(r.quiver.num_arrows() == 2);
    CHECK(r.relations.empty());
    CHECK(AlgebraBasis::compute(r).dim() == 4);
  }
  SUBCASE("single vertex keeps its loop and loop relation") {
    AlgebraPresentation r = restrict_to_convex(p, {"3"});
    CHECK(r.quiver.num_arrows() == 1);
    CHECK(r.relations.size() == 1);  // rho^2 survives, everything else leaves
    CHECK(AlgebraBasis::compute(r).dim() == 2);
  }
  SUBCASE("non-convex choice throws") {
    AlgebraPresentation a3;
    for (const char* v : {"1", "2", "3"}) a3.quiver.add_vertex(v);
    a3.quiver.add_arrow("a", "1", "2");
    a3.quiver.add_arrow("b", "2", "3");
    CHECK_THROWS_WITH_AS(restrict_to_convex(a3, {"1", "3"}), doctest::Contains("NotConvex"),
                         DomainError);
  }
}

TEST_CASE("multiplication agrees with path composition in normal form") {
  AlgebraBasis B = AlgebraBasis::compute(selfinj10());
  // Associativity spot check on all basis triples via coordinates.
  int n = B.dim();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Vec ij = B.multiply(i, j);
      // (b_i b_j) b_k computed two ways for one k.
      for (int k = 0; k < n; ++k) {
        LinComb left(B.field()), right(B.field());
        // left: expand b_i (b_j b_k)
        Vec jk = B.multiply(j, k);
        for (int t = 0; t < n; ++t) {
          if (!jk[t].is_zero()) {
            Vec it = B.multiply(i, t);
            for (int u = 0; u < n; ++u) left.add(B.basis_path(u), it[u] * jk[t]);
          }
          if (!ij[t].is_zero()) {
            Vec tk = B.multiply(t, k);
            for (int u = 0; u < n; ++u) right.add(B.basis_path(u), tk[u] * ij[t]);
          }
        }
        CHECK(left.terms() == right.terms());
      }
    }
}
