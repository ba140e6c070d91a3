#pragma once

// Dense exact linear algebra. Small matrices (desk scale), no pivoting
// heuristics needed: Gaussian elimination over an exact field is stable by
// construction, so the only concern is determinism, which plain left-to-right
// elimination gives us.

#include <cstddef>
#include <optional>
#include <vector>

#include "quiverworks/field.hpp"

namespace qw {

using Vec = std::vector<Scalar>;

Vec zero_vec(const Field& f, std::size_t n);
bool is_zero_vec(const Vec& v);

class Matrix {
 public:
  Matrix() = default;
  Matrix(const Field& f, std::size_t rows, std::size_t cols);
  static Matrix identity(const Field& f, std::size_t n);

  const Field& field() const { return f_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Scalar& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const Scalar& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  Matrix operator*(const Matrix& o) const;
  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix scaled(const Scalar& c) const;
  Matrix transpose() const;
  Vec apply(const Vec& x) const;  // A * x

  bool operator==(const Matrix& o) const;

  std::size_t rank() const;
  // Basis of the right kernel {x : Ax = 0}; each element is a column vector.
  std::vector<Vec> kernel() const;
  // Basis of the column space, as column vectors.
  std::vector<Vec> column_space() const;
  std::optional<Matrix> inverse() const;
  // One solution x of Ax = b, if any.
  std::optional<Vec> solve(const Vec& b) const;

  // Stack rows of `o` below this matrix (same column count).
  Matrix stacked(const Matrix& o) const;

 private:
  Field f_;
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Scalar> a_;
};

// Build a matrix whose columns are the given vectors.
Matrix from_columns(const Field& f, std::size_t dim, const std::vector<Vec>& cols);
// Build a matrix whose rows are the given vectors.
Matrix from_rows(const Field& f, std::size_t dim, const std::vector<Vec>& rows);

// Incrementally maintained reduced row-echelon span of a set of vectors.
// Pivots are the leftmost nonzero entries; callers that need a particular
// monomial order arrange their column indexing so "reduce towards the right"
// means "rewrite high terms into lower ones".
class RowReducer {
 public:
  RowReducer(const Field& f, std::size_t cols) : f_(f), cols_(cols) {}

  // Reduce v against the current span; if a nonzero residual remains, adopt
  // it as a new basis row and return true.
  bool insert(Vec v);
  // Normal form of v modulo the current span.
  Vec reduce(Vec v) const;
  bool contains(const Vec& v) const { return is_zero_vec(reduce(v)); }

  std::size_t rank() const { return rows_.size(); }
  std::size_t cols() const { return cols_; }
  const std::vector<Vec>& basis() const { return rows_; }
  // Sorted pivot column indices.
  std::vector<std::size_t> pivots() const;
  bool is_pivot(std::size_t col) const;

 private:
  Field f_;
  std::size_t cols_;
  std::vector<Vec> rows_;            // normalized, mutually reduced
  std::vector<std::size_t> leads_;   // leads_[i] = pivot column of rows_[i]
};

}  // namespace qw
