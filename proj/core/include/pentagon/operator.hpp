#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <utility>
#include <vector>

#include "pentagon/scalar.hpp"

namespace pentagon {

using MultiIndex = std::vector<std::size_t>;

/// Sparse vector on a flattened tensor space; never stores zeros.
using SparseVector = std::map<std::size_t, Scalar>;

/// Adds value at index, erasing the slot if it cancels.
void accumulate(SparseVector& v, std::size_t index, const Scalar& value);

/// Row-major flattening over leg dimensions (leg 0 is the most significant digit),
/// so lexicographic order on multi-indices equals numeric order on flat indices.
std::size_t flatten(std::span<const std::size_t> index, std::span<const std::size_t> dims);
MultiIndex unflatten(std::size_t flat, std::span<const std::size_t> dims);
std::size_t product(std::span<const std::size_t> dims);

struct Entry {
  std::size_t row;
  std::size_t col;
  Scalar value;
};

/// Exact sparse operator between tensor-product spaces.
///
/// Rows and columns are multi-indices over `row_dims` / `col_dims`; storage is
/// column-major with sorted row lists, which keeps application to basis vectors
/// cheap and iteration order deterministic.
class Operator {
 public:
  Operator() = default;
  Operator(Field field, std::vector<std::size_t> row_dims, std::vector<std::size_t> col_dims);

  static Operator identity(Field field, std::vector<std::size_t> dims);
  /// Duplicated (row, col) pairs are summed.
  static Operator from_entries(Field field, std::vector<std::size_t> row_dims, std::vector<std::size_t> col_dims,
                               std::vector<Entry> entries);
  /// Tensor product; the legs of a come first.
  static Operator kron(const Operator& a, const Operator& b);

  Field field() const noexcept { return field_; }
  const std::vector<std::size_t>& row_dims() const noexcept { return row_dims_; }
  const std::vector<std::size_t>& col_dims() const noexcept { return col_dims_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return columns_.size(); }
  std::size_t legs() const noexcept { return row_dims_.size(); }
  bool square_legs() const noexcept { return row_dims_ == col_dims_; }
  std::size_t nnz() const;

  Scalar at(std::size_t row, std::size_t col) const;
  Scalar at(std::span<const std::size_t> row, std::span<const std::size_t> col) const;
  const std::vector<std::pair<std::size_t, Scalar>>& column(std::size_t col) const { return columns_.at(col); }
  /// All nonzero entries sorted by (row, col).
  std::vector<Entry> entries() const;

  /// Adds value to the (row, col) slot.
  void accumulate(std::size_t row, std::size_t col, const Scalar& value);

  SparseVector apply(const SparseVector& v) const;

  Operator operator+(const Operator& o) const;
  Operator operator-(const Operator& o) const;
  Operator scaled(const Scalar& factor) const;
  Operator transpose() const;
  /// Exchanges the row and column digit of one leg.
  Operator partial_transpose(std::size_t leg) const;

  /// Permutation matrix: one entry equal to 1 in every row and column.
  bool is_permutation() const;

  friend Operator compose(const Operator& a, const Operator& b);
  friend Operator operator*(const Operator& a, const Operator& b) { return compose(a, b); }
  friend bool operator==(const Operator& a, const Operator& b);

 private:
  Field field_ = Field::Q;
  std::vector<std::size_t> row_dims_;
  std::vector<std::size_t> col_dims_;
  std::size_t rows_ = 0;
  std::vector<std::vector<std::pair<std::size_t, Scalar>>> columns_;
};

/// Matrix product a * b.
Operator compose(const Operator& a, const Operator& b);

/// Where an operator sits inside a larger tensor space. `leg_dims` lists the
/// dimension of every leg of the full space.
struct LegPlacement {
  std::size_t total_legs = 0;
  std::vector<std::size_t> target_legs;
  std::vector<std::size_t> leg_dims;
};

/// An operator acting on selected legs of a larger space and as identity elsewhere.
class PlacedOperator {
 public:
  PlacedOperator(Operator op, LegPlacement placement);

  const Operator& op() const noexcept { return op_; }
  const LegPlacement& placement() const noexcept { return placement_; }
  std::size_t space_dim() const noexcept { return space_dim_; }

  SparseVector apply(const SparseVector& v) const;
  void apply_basis(std::size_t basis, const Scalar& coefficient, SparseVector& out) const;
  Operator materialize() const;

 private:
  Operator op_;
  LegPlacement placement_;
  std::vector<std::size_t> strides_;
  std::size_t space_dim_ = 0;
};

/// op on the target legs (in listed order), identity on all others.
Operator place_on_legs(const Operator& op, const LegPlacement& placement);

/// One index slot of an operator: the row or column digit of a leg.
struct Slot {
  std::size_t leg;
  bool column;
  friend bool operator==(const Slot&, const Slot&) = default;
};

/// Regrouping of the index slots of an operator into new rows and columns.
struct SlotGrouping {
  std::vector<Slot> row_slots;
  std::vector<Slot> col_slots;
};

/// For a 2-leg operator S: rows (i1, j1), columns (i2, j2), so that
/// M[(i1,j1),(i2,j2)] = S[(i1,i2),(j1,j2)]. A rank-r factorization of M is
/// exactly an expansion S = sum_a G_a (x) F^a.
SlotGrouping reconstruction_grouping();

/// Reindexes op as a matrix according to grouping. Throws on a grouping that
/// is not a partition of the operator's slots.
Operator reshuffle(const Operator& op, const SlotGrouping& grouping);

/// Swap P on two legs of dimension d: P|i,j> = |j,i>.
Operator swap_operator(Field field, std::size_t dim);

}  // namespace pentagon
