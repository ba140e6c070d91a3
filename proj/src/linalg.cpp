#include "quiverworks/linalg.hpp"

#include <algorithm>

namespace qw {

Vec zero_vec(const Field& f, std::size_t n) { return Vec(n, Scalar::of(f, 0)); }

bool is_zero_vec(const Vec& v) {
  return std::all_of(v.begin(), v.end(), [](const Scalar& s) { return s.is_zero(); });
}

Matrix::Matrix(const Field& f, std::size_t rows, std::size_t cols)
    : f_(f), rows_(rows), cols_(cols), a_(rows * cols, Scalar::of(f, 0)) {}

Matrix Matrix::identity(const Field& f, std::size_t n) {
  Matrix m(f, n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Scalar::of(f, 1);
  return m;
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (cols_ != o.rows_) throw DomainError("ShapeMismatch", "matrix product shapes");
  Matrix r(f_, rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Scalar& aik = at(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < o.cols_; ++j)
        r.at(i, j) = r.at(i, j) + aik * o.at(k, j);
    }
  return r;
}

Matrix Matrix::operator+(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw DomainError("ShapeMismatch", "matrix sum shapes");
  Matrix r(f_, rows_, cols_);
  for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] + o.a_[i];
  return r;
}

Matrix Matrix::operator-(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw DomainError("ShapeMismatch", "matrix difference shapes");
  Matrix r(f_, rows_, cols_);
  for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] - o.a_[i];
  return r;
}

Matrix Matrix::scaled(const Scalar& c) const {
  Matrix r(f_, rows_, cols_);
  for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] * c;
  return r;
}

Matrix Matrix::transpose() const {
  Matrix r(f_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
  return r;
}

Vec Matrix::apply(const Vec& x) const {
  if (x.size() != cols_) throw DomainError("ShapeMismatch", "apply length");
  Vec y = zero_vec(f_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (!at(i, j).is_zero()) y[i] = y[i] + at(i, j) * x[j];
  return y;
}

bool Matrix::operator==(const Matrix& o) const {
  return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
}

Matrix Matrix::stacked(const Matrix& o) const {
  if (cols_ != o.cols_) throw DomainError("ShapeMismatch", "stack column counts");
  Matrix r(f_, rows_ + o.rows_, cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) r.at(i, j) = at(i, j);
  for (std::size_t i = 0; i < o.rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) r.at(rows_ + i, j) = o.at(i, j);
  return r;
}

std::size_t Matrix::rank() const {
  RowReducer red(f_, cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    Vec row(a_.begin() + i * cols_, a_.begin() + (i + 1) * cols_);
    red.insert(std::move(row));
  }
  return red.rank();
}

std::vector<Vec> Matrix::kernel() const {
  RowReducer red(f_, cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    Vec row(a_.begin() + i * cols_, a_.begin() + (i + 1) * cols_);
    red.insert(std::move(row));
  }
  // Free columns parameterize the kernel.
  std::vector<Vec> result;
  const auto& basis = red.basis();
  for (std::size_t c = 0; c < cols_; ++c) {
    if (red.is_pivot(c)) continue;
    Vec x = zero_vec(f_, cols_);
    x[c] = Scalar::of(f_, 1);
    // Back-substitute pivot coordinates: row has pivot at leads[r] and
    // possibly a coefficient in column c.
    for (std::size_t r = 0; r < basis.size(); ++r) {
      std::size_t lead = 0;
      for (std::size_t j = 0; j < cols_; ++j)
        if (!basis[r][j].is_zero()) { lead = j; break; }
      x[lead] = -basis[r][c];
    }
    result.push_back(std::move(x));
  }
  return result;
}

std::vector<Vec> Matrix::column_space() const {
  Matrix t = transpose();
  RowReducer red(f_, rows_);
  std::vector<Vec> cols;
  for (std::size_t i = 0; i < t.rows(); ++i) {
    Vec row(rows_, Scalar::of(f_, 0));
    for (std::size_t j = 0; j < rows_; ++j) row[j] = t.at(i, j);
    if (red.insert(row)) cols.push_back(row);
  }
  return cols;
}

std::optional<Matrix> Matrix::inverse() const {
  if (rows_ != cols_) return std::nullopt;
  std::size_t n = rows_;
  // Gauss-Jordan on [A | I].
  Matrix aug(f_, n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug.at(i, j) = at(i, j);
    aug.at(i, n + i) = Scalar::of(f_, 1);
  }
  for (std::size_t col = 0, row = 0; col < n; ++col) {
    std::size_t pr = row;
    while (pr < n && aug.at(pr, col).is_zero()) ++pr;
    if (pr == n) return std::nullopt;  // singular
    if (pr != row)
      for (std::size_t j = 0; j < 2 * n; ++j) std::swap(aug.at(pr, j), aug.at(row, j));
    Scalar inv = Scalar::of(f_, 1) / aug.at(row, col);
    for (std::size_t j = 0; j < 2 * n; ++j) aug.at(row, j) = aug.at(row, j) * inv;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == row || aug.at(i, col).is_zero()) continue;
      Scalar c = aug.at(i, col);
      for (std::size_t j = 0; j < 2 * n; ++j)
        aug.at(i, j) = aug.at(i, j) - c * aug.at(row, j);
    }
    ++row;
  }
  Matrix inv(f_, n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv.at(i, j) = aug.at(i, n + j);
  return inv;
}

std::optional<Vec> Matrix::solve(const Vec& b) const {
  if (b.size() != rows_) throw DomainError("ShapeMismatch", "solve rhs length");
  // Eliminate on [A | b].
  Matrix aug(f_, rows_, cols_ + 1);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) aug.at(i, j) = at(i, j);
    aug.at(i, cols_) = b[i];
  }
  std::vector<std::size_t> pivot_col;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols_ && row < rows_; ++col) {
    std::size_t pr = row;
    while (pr < rows_ && aug.at(pr, col).is_zero()) ++pr;
    if (pr == rows_) continue;
    if (pr != row)
      for (std::size_t j = 0; j <= cols_; ++j) std::swap(aug.at(pr, j), aug.at(row, j));
    Scalar inv = Scalar::of(f_, 1) / aug.at(row, col);
    for (std::size_t j = 0; j <= cols_; ++j) aug.at(row, j) = aug.at(row, j) * inv;
    for (std::size_t i = 0; i < rows_; ++i) {
      if (i == row || aug.at(i, col).is_zero()) continue;
      Scalar c = aug.at(i, col);
      for (std::size_t j = 0; j <= cols_; ++j)
        aug.at(i, j) = aug.at(i, j) - c * aug.at(row, j);
    }
    pivot_col.push_back(col);
    ++row;
  }
  for (std::size_t i = row; i < rows_; ++i)
    if (!aug.at(i, cols_).is_zero()) return std::nullopt;  // inconsistent
  Vec x = zero_vec(f_, cols_);
  for (std::size_t r = 0; r < pivot_col.size(); ++r) x[pivot_col[r]] = aug.at(r, cols_);
  return x;
}

Matrix from_columns(const Field& f, std::size_t dim, const std::vector<Vec>& cols) {
  Matrix m(f, dim, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    if (cols[j].size() != dim) throw DomainError("ShapeMismatch", "from_columns");
    for (std::size_t i = 0; i < dim; ++i) m.at(i, j) = cols[j][i];
  }
  return m;
}

Matrix from_rows(const Field& f, std::size_t dim, const std::vector<Vec>& rows) {
  Matrix m(f, rows.size(), dim);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != dim) throw DomainError("ShapeMismatch", "from_rows");
    for (std::size_t j = 0; j < dim; ++j) m.at(i, j) = rows[i][j];
  }
  return m;
}

bool RowReducer::insert(Vec v) {
  v = reduce(std::move(v));
  std::size_t lead = cols_;
  for (std::size_t j = 0; j < cols_; ++j)
    if (!v[j].is_zero()) { lead = j; break; }
  if (lead == cols_) return false;
  Scalar inv = Scalar::of(f_, 1) / v[lead];
  for (auto& s : v) s = s * inv;
  // Reduce existing rows by the new one to stay fully reduced.
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    const Scalar& c = rows_[r][lead];
    if (c.is_zero()) continue;
    Scalar cc = c;
    for (std::size_t j = lead; j < cols_; ++j)
      rows_[r][j] = rows_[r][j] - cc * v[j];
  }
  // Keep rows sorted by pivot column for determinism.
  std::size_t pos = 0;
  while (pos < leads_.size() && leads_[pos] < lead) ++pos;
  rows_.insert(rows_.begin() + pos, std::move(v));
  leads_.insert(leads_.begin() + pos, lead);
  return true;
}

Vec RowReducer::reduce(Vec v) const {
  if (v.size() != cols_) throw DomainError("ShapeMismatch", "reduce length");
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    const Scalar& c = v[leads_[r]];
    if (c.is_zero()) continue;
    Scalar cc = c;
    for (std::size_t j = leads_[r]; j < cols_; ++j)
      v[j] = v[j] - cc * rows_[r][j];
  }
  return v;
}

std::vector<std::size_t> RowReducer::pivots() const { return leads_; }

bool RowReducer::is_pivot(std::size_t col) const {
  return std::binary_search(leads_.begin(), leads_.end(), col);
}

}  // namespace qw
