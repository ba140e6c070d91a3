#include <doctest.h>

#include <random>

#include "quiverworks/linalg.hpp"

using namespace qw;

namespace {

Scalar q(long n, long d = 1) { return Scalar::of(Field(), mpq_class(n, d)); }

Matrix mat(const Field& f, std::size_t r, std::size_t c, std::vector<long> entries) {
  REQUIRE(entries.size() == r * c);
  Matrix m(f, r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m.at(i, j) = Scalar::of(f, entries[i * c + j]);
  return m;
}

}  // namespace

TEST_CASE("rational scalars are exact") {
  Scalar third = q(1, 3);
  Scalar sum = third + third + third;
  CHECK(sum.is_one());
  CHECK((q(2, 6) == third));
  CHECK((q(1, 2) * q(2, 3) == q(1, 3)));
  CHECK((q(1, 2) / q(3, 4) == q(2, 3)));
  CHECK((-q(5) + q(5)).is_zero());
  CHECK(q(-1, 2).str() == "-1/2");
}

TEST_CASE("GF(p) arithmetic and inverses") {
  Field f5(5);
  Scalar a = Scalar::of(f5, 3), b = Scalar::of(f5, 4);
  CHECK((a * b).residue() == 2);       // 12 mod 5
  CHECK((a + b).residue() == 2);       // 7 mod 5
  CHECK((a - b).residue() == 4);       // -1 mod 5
  CHECK((Scalar::of(f5, 1) / a).residue() == 2);  // 3 * 2 = 6 = 1
  CHECK((-b).residue() == 1);
  // Rational constants reduce mod p, numerator and denominator separately.
  CHECK(Scalar::of(f5, mpq_class(1, 2)).residue() == 3);  // 2 * 3 = 6 = 1
  CHECK_THROWS_WITH_AS(Scalar::of(f5, mpq_class(1, 5)), doctest::Contains("NotInvertible"),
                       DomainError);
}

TEST_CASE("field constructor rejects non-primes") {
  CHECK_THROWS_AS(Field(4), DomainError);
  CHECK_THROWS_AS(Field(1), DomainError);
  CHECK_THROWS_AS(Field(std::int64_t{1} << 31), DomainError);
  CHECK(Field(2).name() == "GF(2)");
  CHECK(Field((std::int64_t{1} << 31) - 1).p == 2147483647);  // Mersenne prime
  CHECK(Field().name() == "Q");
}

TEST_CASE("cross-field arithmetic throws") {
  Scalar a = Scalar::of(Field(), 1), b = Scalar::of(Field(3), 1);
  CHECK_THROWS_WITH_AS(a + b, doctest::Contains("FieldMismatch"), DomainError);
}

TEST_CASE("matrix rank, kernel, inverse over Q") {
  Field f;
  Matrix a = mat(f, 3, 3, {1, 2, 3, 4, 5, 6, 7, 8, 9});
  CHECK(a.rank() == 2);
  auto ker = a.kernel();
  REQUIRE(ker.size() == 1);
  CHECK(is_zero_vec(a.apply(ker[0])));
  CHECK(!a.inverse().has_value());

  Matrix b = mat(f, 2, 2, {2, 1, 1, 1});
  auto inv = b.inverse();
  REQUIRE(inv.has_value());
  CHECK((b * *inv == Matrix::identity(f, 2)));
  CHECK((*inv * b == Matrix::identity(f, 2)));
}

TEST_CASE("solve reports consistency correctly") {
  Field f;
  Matrix a = mat(f, 3, 2, {1, 0, 0, 1, 1, 1});
  Vec good{q(2), q(3), q(5)}, bad{q(2), q(3), q(6)};
  auto x = a.solve(good);
  REQUIRE(x.has_value());
  CHECK((a.apply(*x) == good));
  CHECK(!a.solve(bad).has_value());
}

TEST_CASE("kernel basis spans the kernel over GF(2)") {
  Field f2(2);
  Matrix a = mat(f2, 2, 4, {1, 1, 0, 0, 0, 0, 1, 1});
  auto ker = a.kernel();
  REQUIRE(ker.size() == 2);
  for (const Vec& v : ker) CHECK(is_zero_vec(a.apply(v)));
  // rank-nullity
  CHECK(a.rank() + ker.size() == 4);
}

TEST_CASE("row reducer maintains a canonical span") {
  Field f;
  RowReducer red(f, 4);
  CHECK(red.insert({q(0), q(1), q(2), q(3)}));
  CHECK(red.insert({q(1), q(1), q(0), q(0)}));
  CHECK(!red.insert({q(1), q(2), q(2), q(3)}));  // sum of the first two
  CHECK(red.rank() == 2);
  CHECK(red.pivots() == std::vector<std::size_t>{0, 1});
  // Normal form is zero exactly on members of the span.
  CHECK(red.contains({q(2), q(3), q(2), q(3)}));
  CHECK(!red.contains({q(0), q(0), q(1), q(0)}));
  // Reduction lands outside the pivot columns.
  Vec nf = red.reduce({q(5), q(7), q(1), q(1)});
  CHECK(nf[0].is_zero());
  CHECK(nf[1].is_zero());
}

TEST_CASE("row reducer agrees with matrix rank on random input") {
  std::mt19937 rng(20260815);
  for (int trial = 0; trial < 20; ++trial) {
    Field f = (trial % 2 == 0) ? Field() : Field(7);
    std::size_t rows = 1 + rng() % 6, cols = 1 + rng() % 6;
    Matrix m(f, rows, cols);
    RowReducer red(f, cols);
    for (std::size_t i = 0; i < rows; ++i) {
      Vec v(cols, Scalar::of(f, 0));
      for (std::size_t j = 0; j < cols; ++j) {
        v[j] = Scalar::of(f, static_cast<std::int64_t>(rng() % 7) - 3);
        m.at(i, j) = v[j];
      }
      red.insert(v);
    }
    CHECK(red.rank() == m.rank());
    CHECK(m.rank() == m.transpose().rank());
    CHECK(m.rank() + m.kernel().size() == cols);
  }
}
