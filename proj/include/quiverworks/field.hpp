#pragma once

// Exact scalar arithmetic over Q (GMP rationals) and prime fields GF(p),
// p < 2^31. No floating point anywhere: every computation in the library is
// exact, so equality tests are honest.

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace qw {

// Raised for domain errors (bad input data, unsatisfied preconditions).
// `code` carries a stable machine-readable name, e.g. "NotAPrime".
struct DomainError : std::runtime_error {
  std::string code;
  DomainError(std::string c, const std::string& msg)
      : std::runtime_error(c + ": " + msg), code(std::move(c)) {}
};

// Raised for malformed workspace files.
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Field descriptor: p == 0 means Q, otherwise GF(p) with p prime, p < 2^31.
struct Field {
  std::int64_t p = 0;

  Field() = default;
  explicit Field(std::int64_t characteristic);

  bool rational() const { return p == 0; }
  bool operator==(const Field&) const = default;
  std::string name() const;  // "Q" or "GF(p)"
};

// A scalar tagged with its field. Arithmetic between scalars of different
// fields is a programming error and throws.
class Scalar {
 public:
  Scalar() = default;  // zero over Q
  static Scalar of(const Field& f, std::int64_t n);
  static Scalar of(const Field& f, const mpq_class& q);

  const Field& field() const { return f_; }
  bool is_zero() const;
  bool is_one() const;

  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const;  // throws on division by zero
  Scalar operator-() const;
  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  // Rational value (field must be Q).
  const mpq_class& rat() const;
  // Residue in [0, p) (field must be GF(p)).
  std::int64_t residue() const;

  // Canonical text form: "3", "-1/2", or the residue for GF(p).
  std::string str() const;

 private:
  Field f_;
  mpq_class q_;         // used when f_.p == 0
  std::int64_t r_ = 0;  // used when f_.p != 0
  void check_same(const Scalar& o) const;
};

// Deterministic primality check, valid for all n < 2^31.
bool is_prime(std::int64_t n);

// Inverse of a modulo p (extended Euclid); throws DomainError on gcd != 1.
std::int64_t inverse_mod(std::int64_t a, std::int64_t p);

}  // namespace qw
