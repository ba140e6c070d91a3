#include <doctest.h>

#include "builders.hpp"
#include "quiverworks/textio.hpp"

using namespace qw;

static std::string fixture(const std::string& name) {
  return std::string(FIXTURE_DIR) + "/" + name;
}

TEST_CASE("algebra fixtures round-trip and match the built-in presentations") {
  // Parse -> print -> parse -> print must be a fixed point, and the printed
  // form must agree with the hand-built presentation.
  for (const char* name : {"a2", "kronecker", "radsq5", "selfinj10", "loop_sq"}) {
    Fixture fx = load_fixture(fixture(std::string(name) + ".alg"));
    REQUIRE(fx.kind == Fixture::Kind::algebra);
    CHECK(fx.name == name);
    std::string once = print_algebra(fx.pres, fx.modules);
    Fixture again = parse_fixture(once, fx.name, ".");
    CHECK(print_algebra(again.pres, again.modules) == once);
  }

  AlgebraPresentation builtins[] = {qwtest::a2(), qwtest::kronecker(),
                                    qwtest::radsq5(), qwtest::selfinj10(),
                                    qwtest::loop_sq()};
  const char* names[] = {"a2", "kronecker", "radsq5", "selfinj10", "loop_sq"};
  for (int i = 0; i < 5; ++i) {
    Fixture fx = load_fixture(fixture(std::string(names[i]) + ".alg"));
    CHECK(print_algebra(fx.pres, {}) == print_algebra(builtins[i], {}));
  }
}

TEST_CASE("path words parse in function order") {
  AlgebraPresentation pres = qwtest::selfinj10();
  const Quiver& q = pres.quiver;
  Path p = parse_path_word(q, "s*r*d");
  // Applied first-to-last: d, then r, then s.
  REQUIRE(p.length() == 3);
  CHECK(p.base == q.vertex("x"));
  CHECK(q.arrow(p.arrows[0]).name == "d");
  CHECK(q.arrow(p.arrows[1]).name == "r");
  CHECK(q.arrow(p.arrows[2]).name == "s");
  CHECK(p.str(q) == "s*r*d");

  CHECK(parse_path_word(q, "e_y") == Path::lazy(q.vertex("y")));
  CHECK_THROWS_AS(parse_path_word(q, "d*d"), ParseError);  // not composable
}

TEST_CASE("linear combinations parse coefficients and signs") {
  AlgebraPresentation pres = qwtest::kronecker();
  const Quiver& q = pres.quiver;
  Field f;
  LinComb v = parse_lincomb(q, f, "2*a - 1/3*b");
  REQUIRE(v.terms().size() == 2);
  CHECK(v.terms().at(parse_path_word(q, "a")) == Scalar::of(f, 2));
  CHECK(v.terms().at(parse_path_word(q, "b")) == Scalar::of(f, mpq_class(-1, 3)));

  // "a - a" cancels, "0" is the zero combination.
  CHECK(parse_lincomb(q, f, "a - a").is_zero());
  CHECK(parse_lincomb(q, f, "0").is_zero());
  CHECK(parse_lincomb(q, f, "-a + 2*a").terms().at(parse_path_word(q, "a")) ==
        Scalar::of(f, 1));
}

TEST_CASE("module blocks build checked representations") {
  Fixture fx = load_fixture(fixture("kronecker.alg"));
  REQUIRE(fx.modules.size() == 1);
  auto alg = std::make_shared<AlgebraBasis>(AlgebraBasis::compute(fx.pres));
  Representation m = build_module(fx.modules[0], alg);
  CHECK(m.dim_vector() == std::vector<int>{1, 2});
  // The fixture's module is P_1 on the nose.
  Representation p1 = projective_at(alg, fx.pres.quiver.vertex("1"));
  CHECK(m.dims == p1.dims);
  CHECK(isomorphic(m, p1) == Verdict::yes);

  // Shape errors are caught at build time.
  ModuleSpec bad = fx.modules[0];
  bad.mats["a"] = parse_matrix(fx.pres.field, "[[1,0],[0,1]]");
  CHECK_THROWS_AS(build_module(bad, alg), DomainError);
}

TEST_CASE("parse errors carry line numbers and reasons") {
  CHECK_THROWS_WITH_AS(parse_fixture("field R\n", "t", "."),
                       doctest::Contains("line 1"), ParseError);
  CHECK_THROWS_AS(parse_fixture("vertex 1\n", "t", "."), ParseError);  // bad first keyword
  CHECK_THROWS_AS(parse_fixture("field Q\nvertex 1\ndim 1 = 2\n", "t", "."),
                  ParseError);  // dim outside a module block
  CHECK_THROWS_AS(parse_fixture("field Q\nvertex 1\narrow r: 1 -> 1\n"
                                "module M\ndim 1 = 2\nmat r = [[1,2],[3]]\n",
                                "t", "."),
                  ParseError);  // ragged matrix
  CHECK_THROWS_AS(load_fixture(fixture("no_such_file.alg")), ParseError);
}

TEST_CASE("comments and blank lines are ignored") {
  Fixture fx = parse_fixture("# header\nfield GF(5)\n\nvertex u # trailing\n", "t", ".");
  CHECK(fx.pres.field.p == 5);
  CHECK(fx.pres.quiver.num_vertices() == 1);
  CHECK(fx.pres.quiver.vertex_name(0) == "u");
}

TEST_CASE("the nine-vertex fixture has the expected exact invariants") {
  Fixture fx = load_fixture(fixture("sc9.alg"));
  fx.pres.check_relations();
  AlgebraBasis basis = AlgebraBasis::compute(fx.pres);
  const Quiver& q = fx.pres.quiver;
  // 9 lazy paths + 10 arrows + 6 surviving length-two paths.
  CHECK(basis.dim() == 25);
  CHECK(basis.nil_degree() == 3);
  Field f;
  auto one_term = [&](const std::string& w) {
    return LinComb::term(f, Scalar::of(f, 1), parse_path_word(q, w));
  };
  // Both commutativity relations merge their two sides...
  CHECK(basis.in_ideal(one_term("be*de") - one_term("al*de")));
  CHECK(basis.in_ideal(one_term("ze*mu") - one_term("et*la")));
  CHECK_FALSE(basis.in_ideal(one_term("be*de")));
  // ...and the length-three zero relation kills the parallel composite too.
  CHECK(basis.in_ideal(one_term("ze*mu*nu")));
  CHECK(basis.in_ideal(one_term("et*la*nu")));
  // Pair dimensions at the corners.
  CHECK(basis.pair_basis(q.vertex("c1"), q.vertex("v1")).size() == 1);  // al*ep
  CHECK(basis.pair_basis(q.vertex("v4"), q.vertex("v3")).size() == 1);  // ze*mu class
  CHECK(basis.pair_basis(q.vertex("v5"), q.vertex("v3")).size() == 0);
}
