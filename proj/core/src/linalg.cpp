#include "pentagon/linalg.hpp"

#include <utility>

#include "pentagon/errors.hpp"

namespace pentagon {

Matrix::Matrix(Field field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), data_(rows * cols, Scalar::zero(field)) {}

Matrix Matrix::identity(Field field, std::size_t n) {
  Matrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Scalar::one(field);
  return m;
}

Matrix Matrix::from_operator(const Operator& op) {
  Matrix m(op.field(), op.rows(), op.cols());
  for (std::size_t c = 0; c < op.cols(); ++c)
    for (const auto& [r, v] : op.column(c)) m(r, c) = v;
  return m;
}

Operator Matrix::to_operator(std::vector<std::size_t> row_dims, std::vector<std::size_t> col_dims) const {
  Operator op(field_, std::move(row_dims), std::move(col_dims));
  if (op.rows() != rows_ || op.cols() != cols_) throw DimensionMismatch("to_operator: shape mismatch");
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) op.accumulate(r, c, (*this)(r, c));
  return op;
}

Matrix Matrix::transpose() const {
  Matrix t(field_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw DimensionMismatch("matrix product: inner dimensions differ");
  if (a.field_ != b.field_) throw FieldMismatch("matrix product: field mismatch");
  Matrix out(a.field_, a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Scalar& x = a(i, k);
      if (x.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        if (!b(k, j).is_zero()) out(i, j) += x * b(k, j);
      }
    }
  }
  return out;
}

namespace {

// Bareiss forward elimination in place. Returns pivot columns; rows
// [0, pivots.size()) hold the echelon form, the rest are zero.
std::vector<std::size_t> bareiss(Matrix& m) {
  std::vector<std::size_t> pivots;
  Scalar prev = Scalar::one(m.field());
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && m(p, c).is_zero()) ++p;
    if (p == m.rows()) continue;
    if (p != r)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
    const Scalar pivot = m(r, c);
    for (std::size_t i = r + 1; i < m.rows(); ++i) {
      const Scalar lead = m(i, c);
      for (std::size_t j = c + 1; j < m.cols(); ++j) {
        Scalar v = pivot * m(i, j);
        if (!lead.is_zero() && !m(r, j).is_zero()) v -= lead * m(r, j);
        if (!v.is_zero() && !prev.is_one()) v /= prev;
        m(i, j) = std::move(v);
      }
      m(i, c) = Scalar::zero(m.field());
    }
    prev = pivot;
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

Echelon row_reduce(Matrix m) {
  std::vector<std::size_t> pivots = bareiss(m);
  for (std::size_t k = pivots.size(); k-- > 0;) {
    const std::size_t pc = pivots[k];
    const Scalar inv = Scalar::one(m.field()) / m(k, pc);
    for (std::size_t j = pc; j < m.cols(); ++j)
      if (!m(k, j).is_zero()) m(k, j) *= inv;
    for (std::size_t i = 0; i < k; ++i) {
      const Scalar f = m(i, pc);
      if (f.is_zero()) continue;
      for (std::size_t j = pc; j < m.cols(); ++j)
        if (!m(k, j).is_zero()) m(i, j) -= f * m(k, j);
    }
  }
  return {std::move(m), std::move(pivots)};
}

std::size_t rank(const Matrix& m) {
  Matrix copy = m;
  return bareiss(copy).size();
}

RankFactorization rank_factorize(const Matrix& mat) {
  Echelon e = row_reduce(mat);
  const std::size_t r = e.pivots.size();
  RankFactorization out{Matrix(mat.field(), mat.rows(), r), Matrix(mat.field(), r, mat.cols()), r, e.pivots};
  for (std::size_t i = 0; i < mat.rows(); ++i)
    for (std::size_t k = 0; k < r; ++k) out.left(i, k) = mat(i, e.pivots[k]);
  for (std::size_t k = 0; k < r; ++k)
    for (std::size_t j = 0; j < mat.cols(); ++j) out.right(k, j) = e.reduced(k, j);
  return out;
}

RankFactorization rank_factorize(const Operator& mat) { return rank_factorize(Matrix::from_operator(mat)); }

Matrix invert(const Matrix& m, const std::string& name) {
  if (m.rows() != m.cols()) throw DimensionMismatch("invert: " + name + " is not square");
  const std::size_t n = m.rows();
  Matrix aug(m.field(), n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = Scalar::one(m.field());
  }
  Echelon e = row_reduce(std::move(aug));
  std::size_t left_rank = 0;
  for (auto p : e.pivots) left_rank += (p < n);
  if (left_rank < n) throw SingularMatrix(name + " is singular", left_rank);
  Matrix inv(m.field(), n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = e.reduced(i, n + j);
  return inv;
}

Operator invert(const Operator& op, const std::string& name) {
  if (op.rows() != op.cols()) throw DimensionMismatch("invert: " + name + " is not square");
  return invert(Matrix::from_operator(op), name).to_operator(op.col_dims(), op.row_dims());
}

std::optional<Matrix> solve(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows()) throw DimensionMismatch("solve: row counts differ");
  const std::size_t n = a.cols();
  Matrix aug(a.field(), a.rows(), n + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
    for (std::size_t j = 0; j < b.cols(); ++j) aug(i, n + j) = b(i, j);
  }
  Echelon e = row_reduce(std::move(aug));
  Matrix x(a.field(), n, b.cols());
  for (std::size_t k = 0; k < e.pivots.size(); ++k) {
    if (e.pivots[k] >= n) return std::nullopt;
    for (std::size_t j = 0; j < b.cols(); ++j) x(e.pivots[k], j) = e.reduced(k, n + j);
  }
  return x;
}

}  // namespace pentagon
