#include "crnkit/matrix.hpp"

#include "crnkit/errors.hpp"

#include <sstream>
#include <utility>

namespace crnkit {

ExactMatrix::ExactMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

ExactMatrix::ExactMatrix(std::initializer_list<std::initializer_list<Rational>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw InputError("ragged matrix literal");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

ExactMatrix ExactMatrix::identity(std::size_t n) {
  ExactMatrix out(n, n);
  for (std::size_t i = 0; i < n; ++i) out(i, i) = 1;
  return out;
}

ExactMatrix ExactMatrix::from_columns(const std::vector<std::vector<Rational>>& columns,
                                      std::size_t rows) {
  ExactMatrix out(rows, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (columns[c].size() != rows) throw InputError("column length mismatch");
    for (std::size_t r = 0; r < rows; ++r) out(r, c) = columns[c][r];
  }
  return out;
}

std::vector<Rational> ExactMatrix::row(std::size_t r) const {
  return {data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
          data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_)};
}

std::vector<Rational> ExactMatrix::column(std::size_t c) const {
  std::vector<Rational> out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
  return out;
}

ExactMatrix ExactMatrix::transpose() const {
  ExactMatrix out(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) out(c, r) = (*this)(r, c);
  return out;
}

ExactMatrix ExactMatrix::select_columns(std::span<const std::size_t> columns) const {
  ExactMatrix out(rows_, columns.size());
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < columns.size(); ++c) out(r, c) = (*this)(r, columns[c]);
  return out;
}

ExactMatrix ExactMatrix::select_rows(std::span<const std::size_t> rows) const {
  ExactMatrix out(rows.size(), cols_);
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < cols_; ++c) out(r, c) = (*this)(rows[r], c);
  return out;
}

ExactMatrix ExactMatrix::append_columns(const ExactMatrix& other) const {
  if (other.rows_ != rows_) throw InputError("append_columns: row count mismatch");
  ExactMatrix out(rows_, cols_ + other.cols_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) out(r, c) = (*this)(r, c);
    for (std::size_t c = 0; c < other.cols_; ++c) out(r, cols_ + c) = other(r, c);
  }
  return out;
}

ExactMatrix ExactMatrix::append_rows(const ExactMatrix& other) const {
  if (rows_ != 0 && other.rows_ != 0 && other.cols_ != cols_)
    throw InputError("append_rows: column count mismatch");
  if (rows_ == 0) return other;
  if (other.rows_ == 0) return *this;
  ExactMatrix out(rows_ + other.rows_, cols_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) out(r, c) = (*this)(r, c);
  for (std::size_t r = 0; r < other.rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) out(rows_ + r, c) = other(r, c);
  return out;
}

ExactMatrix ExactMatrix::operator*(const ExactMatrix& rhs) const {
  if (cols_ != rhs.rows_) throw InputError("matrix product dimension mismatch");
  ExactMatrix out(rows_, rhs.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Rational& a = (*this)(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < rhs.cols_; ++j) out(i, j) += a * rhs(k, j);
    }
  return out;
}

ExactMatrix ExactMatrix::operator+(const ExactMatrix& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw InputError("matrix sum dimension mismatch");
  ExactMatrix out = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] += rhs.data_[i];
  return out;
}

ExactMatrix ExactMatrix::operator-(const ExactMatrix& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw InputError("matrix difference dimension mismatch");
  ExactMatrix out = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] -= rhs.data_[i];
  return out;
}

std::vector<Rational> ExactMatrix::apply(std::span<const Rational> x) const {
  if (x.size() != cols_) throw InputError("matrix-vector dimension mismatch");
  std::vector<Rational> out(rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) out[r] += (*this)(r, c) * x[c];
  return out;
}

bool ExactMatrix::operator==(const ExactMatrix& rhs) const {
  return rows_ == rhs.rows_ && cols_ == rhs.cols_ && data_ == rhs.data_;
}

bool ExactMatrix::is_zero() const {
  for (const auto& v : data_)
    if (v != 0) return false;
  return true;
}

ExactMatrix::Echelon ExactMatrix::rref() const {
  Echelon out{*this, {}};
  ExactMatrix& m = out.reduced;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols_ && row < rows_; ++col) {
    std::size_t pivot = row;
    while (pivot < rows_ && m(pivot, col) == 0) ++pivot;
    if (pivot == rows_) continue;
    if (pivot != row)
      for (std::size_t c = 0; c < cols_; ++c) std::swap(m(pivot, c), m(row, c));
    const Rational lead = m(row, col);
    for (std::size_t c = col; c < cols_; ++c) m(row, c) /= lead;
    for (std::size_t r = 0; r < rows_; ++r) {
      if (r == row || m(r, col) == 0) continue;
      const Rational factor = m(r, col);
      for (std::size_t c = col; c < cols_; ++c) m(r, c) -= factor * m(row, c);
    }
    out.pivots.push_back(col);
    ++row;
  }
  return out;
}

std::size_t ExactMatrix::rank() const { return rref().pivots.size(); }

ExactMatrix ExactMatrix::nullspace() const {
  const Echelon e = rref();
  std::vector<bool> is_pivot(cols_, false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<std::size_t> free_cols;
  for (std::size_t c = 0; c < cols_; ++c)
    if (!is_pivot[c]) free_cols.push_back(c);
  ExactMatrix out(cols_, free_cols.size());
  for (std::size_t k = 0; k < free_cols.size(); ++k) {
    out(free_cols[k], k) = 1;
    for (std::size_t r = 0; r < e.pivots.size(); ++r) out(e.pivots[r], k) = -e.reduced(r, free_cols[k]);
  }
  return out;
}

ExactMatrix ExactMatrix::left_kernel() const {
  ExactMatrix basis = transpose().nullspace().transpose();
  if (basis.rows() == 0) return ExactMatrix(0, rows_);
  ExactMatrix reduced = basis.rref().reduced;
  return reduced;
}

ExactMatrix ExactMatrix::column_basis() const {
  const Echelon e = rref();
  return select_columns(e.pivots);
}

std::optional<ExactMatrix> ExactMatrix::solve(const ExactMatrix& rhs) const {
  if (rhs.rows_ != rows_) throw InputError("solve: row count mismatch");
  const ExactMatrix augmented = append_columns(rhs);
  const Echelon e = augmented.rref();
  ExactMatrix x(cols_, rhs.cols_);
  for (std::size_t r = 0; r < e.pivots.size(); ++r) {
    if (e.pivots[r] >= cols_) return std::nullopt;
    for (std::size_t c = 0; c < rhs.cols_; ++c) x(e.pivots[r], c) = e.reduced(r, cols_ + c);
  }
  return x;
}

Rational ExactMatrix::determinant() const {
  if (rows_ != cols_) throw InputError("determinant of a non-square matrix");
  ExactMatrix m = *this;
  Rational det = 1;
  for (std::size_t col = 0; col < cols_; ++col) {
    std::size_t pivot = col;
    while (pivot < rows_ && m(pivot, col) == 0) ++pivot;
    if (pivot == rows_) return 0;
    if (pivot != col) {
      for (std::size_t c = 0; c < cols_; ++c) std::swap(m(pivot, c), m(col, c));
      det = -det;
    }
    det *= m(col, col);
    for (std::size_t r = col + 1; r < rows_; ++r) {
      if (m(r, col) == 0) continue;
      const Rational factor = m(r, col) / m(col, col);
      for (std::size_t c = col; c < cols_; ++c) m(r, c) -= factor * m(col, c);
    }
  }
  return det;
}

ExactMatrix ExactMatrix::inverse() const {
  if (rows_ != cols_) throw InputError("inverse of a non-square matrix");
  const Echelon e = append_columns(identity(rows_)).rref();
  if (e.pivots.size() < rows_ || e.pivots[rows_ - 1] >= cols_)
    throw NumericalError("matrix is singular");
  ExactMatrix out(rows_, cols_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) out(r, c) = e.reduced(r, cols_ + c);
  return out;
}

std::string ExactMatrix::to_string() const {
  std::ostringstream os;
  for (std::size_t r = 0; r < rows_; ++r) {
    os << '[';
    for (std::size_t c = 0; c < cols_; ++c) os << (c ? " " : "") << crnkit::to_string((*this)(r, c));
    os << "]\n";
  }
  return os.str();
}

bool same_column_space(const ExactMatrix& a, const ExactMatrix& b) {
  if (a.rows() != b.rows()) return false;
  const std::size_t ra = a.rank();
  return ra == b.rank() && a.append_columns(b).rank() == ra;
}

Rational dot(std::span<const Rational> a, std::span<const Rational> b) {
  if (a.size() != b.size()) throw InputError("dot: length mismatch");
  Rational out = 0;
  for (std::size_t i = 0; i < a.size(); ++i) out += a[i] * b[i];
  return out;
}

}  // namespace crnkit
