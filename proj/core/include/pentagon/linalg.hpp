#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "pentagon/operator.hpp"
#include "pentagon/scalar.hpp"

namespace pentagon {

/// Dense exact matrix, row-major.
class Matrix {
 public:
  Matrix() = default;
  Matrix(Field field, std::size_t rows, std::size_t cols);

  static Matrix identity(Field field, std::size_t n);
  /// Flattened view of an operator (row and column multi-indices flattened).
  static Matrix from_operator(const Operator& op);
  Operator to_operator(std::vector<std::size_t> row_dims, std::vector<std::size_t> col_dims) const;

  Field field() const noexcept { return field_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Matrix transpose() const;
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend bool operator==(const Matrix& a, const Matrix& b) = default;

 private:
  Field field_ = Field::Q;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

/// Reduced row echelon form with the pivot columns.
struct Echelon {
  Matrix reduced;
  std::vector<std::size_t> pivots;
};

/// Fraction-free (Bareiss) forward elimination followed by back substitution.
/// Pivot: first column with a nonzero candidate, lowest such row.
Echelon row_reduce(Matrix m);

/// Exact rank through Bareiss elimination.
std::size_t rank(const Matrix& m);

/// mat = left * right with left: rows x r (pivot columns of mat) and
/// right: r x cols (nonzero rows of the reduced echelon form).
struct RankFactorization {
  Matrix left;
  Matrix right;
  std::size_t rank = 0;
  std::vector<std::size_t> pivots;
};

RankFactorization rank_factorize(const Matrix& mat);
RankFactorization rank_factorize(const Operator& mat);

/// Exact inverse. `name` labels the matrix in the SingularMatrix message.
Matrix invert(const Matrix& m, const std::string& name = "matrix");
Operator invert(const Operator& op, const std::string& name = "operator");

/// Minimum-support solution of a * x = b (free variables set to zero), one
/// column of x per column of b. Returns nullopt when the system is inconsistent.
std::optional<Matrix> solve(const Matrix& a, const Matrix& b);

}  // namespace pentagon
