#pragma once

#include "crnkit/rational.hpp"

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace crnkit {

/// Dense row-major matrix over exact rationals.
class ExactMatrix {
 public:
  ExactMatrix() = default;
  ExactMatrix(std::size_t rows, std::size_t cols);
  ExactMatrix(std::initializer_list<std::initializer_list<Rational>> rows);

  static ExactMatrix identity(std::size_t n);
  /// Builds a matrix whose columns are the given vectors (all equal length).
  static ExactMatrix from_columns(const std::vector<std::vector<Rational>>& columns,
                                  std::size_t rows);

  [[nodiscard]] std::size_t rows() const noexcept { return rows_; }
  [[nodiscard]] std::size_t cols() const noexcept { return cols_; }
  [[nodiscard]] bool empty() const noexcept { return rows_ == 0 || cols_ == 0; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  [[nodiscard]] std::vector<Rational> row(std::size_t r) const;
  [[nodiscard]] std::vector<Rational> column(std::size_t c) const;

  [[nodiscard]] ExactMatrix transpose() const;
  [[nodiscard]] ExactMatrix select_columns(std::span<const std::size_t> columns) const;
  [[nodiscard]] ExactMatrix select_rows(std::span<const std::size_t> rows) const;
  /// Horizontal concatenation [this | other].
  [[nodiscard]] ExactMatrix append_columns(const ExactMatrix& other) const;
  /// Vertical concatenation [this ; other].
  [[nodiscard]] ExactMatrix append_rows(const ExactMatrix& other) const;

  ExactMatrix operator*(const ExactMatrix& rhs) const;
  ExactMatrix operator+(const ExactMatrix& rhs) const;
  ExactMatrix operator-(const ExactMatrix& rhs) const;
  [[nodiscard]] std::vector<Rational> apply(std::span<const Rational> x) const;
  bool operator==(const ExactMatrix& rhs) const;

  [[nodiscard]] bool is_zero() const;

  struct Echelon;
  /// Fraction-exact Gauss-Jordan elimination; pivots taken left to right.
  [[nodiscard]] Echelon rref() const;
  [[nodiscard]] std::size_t rank() const;

  /// Basis of {x : A x = 0} as columns; one column per free variable, with a 1
  /// at that free variable and zeros at the other free variables.
  [[nodiscard]] ExactMatrix nullspace() const;
  /// Basis of {w : w^T A = 0} as rows, in reduced row echelon form.
  [[nodiscard]] ExactMatrix left_kernel() const;
  /// Columns of A at the pivot positions (a basis of the column space drawn from A itself).
  [[nodiscard]] ExactMatrix column_basis() const;

  /// A particular solution X of A X = B, or nullopt when inconsistent.
  [[nodiscard]] std::optional<ExactMatrix> solve(const ExactMatrix& rhs) const;

  [[nodiscard]] Rational determinant() const;
  /// Inverse of a square nonsingular matrix; throws NumericalError if singular.
  [[nodiscard]] ExactMatrix inverse() const;

  [[nodiscard]] std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

struct ExactMatrix::Echelon {
  ExactMatrix reduced;               ///< reduced row echelon form
  std::vector<std::size_t> pivots;   ///< pivot column per nonzero row
};

/// True iff the column spaces of a and b coincide.
bool same_column_space(const ExactMatrix& a, const ExactMatrix& b);

Rational dot(std::span<const Rational> a, std::span<const Rational> b);

}  // namespace crnkit
