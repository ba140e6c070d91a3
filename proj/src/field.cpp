#include "quiverworks/field.hpp"

namespace qw {

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::int64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

std::int64_t inverse_mod(std::int64_t a, std::int64_t p) {
  std::int64_t old_r = a % p, r = p, old_s = 1, s = 0;
  if (old_r < 0) old_r += p;
  while (r != 0) {
    std::int64_t q = old_r / r;
    std::int64_t t = old_r - q * r;
    old_r = r;
    r = t;
    t = old_s - q * s;
    old_s = s;
    s = t;
  }
  if (old_r != 1) throw DomainError("NotInvertible", "no inverse mod p");
  return ((old_s % p) + p) % p;
}

Field::Field(std::int64_t characteristic) : p(characteristic) {
  if (p == 0) return;
  if (p < 2 || p >= (std::int64_t{1} << 31) || !is_prime(p))
    throw DomainError("NotAPrime", "field characteristic must be a prime < 2^31");
}

std::string Field::name() const {
  return rational() ? "Q" : "GF(" + std::to_string(p) + ")";
}

Scalar Scalar::of(const Field& f, std::int64_t n) {
  Scalar s;
  s.f_ = f;
  if (f.rational()) {
    s.q_ = mpq_class(static_cast<long>(n));
  } else {
    s.r_ = ((n % f.p) + f.p) % f.p;
  }
  return s;
}

Scalar Scalar::of(const Field& f, const mpq_class& q) {
  Scalar s;
  s.f_ = f;
  if (f.rational()) {
    s.q_ = q;
    s.q_.canonicalize();
  } else {
    // Reduce numerator and denominator separately mod p.
    mpz_class num = q.get_num(), den = q.get_den();
    std::int64_t n = mpz_fdiv_ui(num.get_mpz_t(), static_cast<unsigned long>(f.p));
    std::int64_t d = mpz_fdiv_ui(den.get_mpz_t(), static_cast<unsigned long>(f.p));
    if (d == 0) throw DomainError("NotInvertible", "denominator divisible by p");
    s.r_ = (n * inverse_mod(d, f.p)) % f.p;
  }
  return s;
}

void Scalar::check_same(const Scalar& o) const {
  if (!(f_ == o.f_))
    throw DomainError("FieldMismatch", "arithmetic across different fields");
}

bool Scalar::is_zero() const { return f_.rational() ? q_ == 0 : r_ == 0; }
bool Scalar::is_one() const { return f_.rational() ? q_ == 1 : r_ == 1; }

Scalar Scalar::operator+(const Scalar& o) const {
  check_same(o);
  Scalar s;
  s.f_ = f_;
  if (f_.rational())
    s.q_ = q_ + o.q_;
  else
    s.r_ = (r_ + o.r_) % f_.p;
  return s;
}

Scalar Scalar::operator-(const Scalar& o) const {
  check_same(o);
  Scalar s;
  s.f_ = f_;
  if (f_.rational())
    s.q_ = q_ - o.q_;
  else
    s.r_ = ((r_ - o.r_) % f_.p + f_.p) % f_.p;
  return s;
}

Scalar Scalar::operator*(const Scalar& o) const {
  check_same(o);
  Scalar s;
  s.f_ = f_;
  if (f_.rational())
    s.q_ = q_ * o.q_;
  else
    s.r_ = (r_ * o.r_) % f_.p;  // p < 2^31, so the product fits in int64
  return s;
}

Scalar Scalar::operator/(const Scalar& o) const {
  check_same(o);
  if (o.is_zero()) throw DomainError("DivisionByZero", "scalar division by zero");
  Scalar s;
  s.f_ = f_;
  if (f_.rational())
    s.q_ = q_ / o.q_;
  else
    s.r_ = (r_ * inverse_mod(o.r_, f_.p)) % f_.p;
  return s;
}

Scalar Scalar::operator-() const {
  Scalar s;
  s.f_ = f_;
  if (f_.rational())
    s.q_ = -q_;
  else
    s.r_ = (f_.p - r_) % f_.p;
  return s;
}

bool Scalar::operator==(const Scalar& o) const {
  if (!(f_ == o.f_)) return false;
  return f_.rational() ? q_ == o.q_ : r_ == o.r_;
}

const mpq_class& Scalar::rat() const {
  if (!f_.rational()) throw DomainError("FieldMismatch", "rat() on GF(p) scalar");
  return q_;
}

std::int64_t Scalar::residue() const {
  if (f_.rational()) throw DomainError("FieldMismatch", "residue() on Q scalar");
  return r_;
}

std::string Scalar::str() const {
  if (f_.rational()) return q_.get_str();
  return std::to_string(r_);
}

}  // namespace qw
