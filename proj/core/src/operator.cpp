#include "pentagon/operator.hpp"

#include <algorithm>
#include <string>

#include "pentagon/errors.hpp"

namespace pentagon {

namespace {

std::string dims_string(const std::vector<std::size_t>& dims) {
  std::string s = "[";
  for (std::size_t i = 0; i < dims.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(dims[i]);
  }
  return s + "]";
}

void require_same_field(Field a, Field b) {
  if (a != b) {
    throw FieldMismatch("operator field mismatch: " + std::string(field_name(a)) + " vs " +
                        std::string(field_name(b)));
  }
}

void add_sorted(std::vector<std::pair<std::size_t, Scalar>>& col, std::size_t row, const Scalar& value) {
  if (value.is_zero()) return;
  auto it = std::lower_bound(col.begin(), col.end(), row,
                             [](const auto& e, std::size_t r) { return e.first < r; });
  if (it != col.end() && it->first == row) {
    it->second += value;
    if (it->second.is_zero()) col.erase(it);
  } else {
    col.insert(it, {row, value});
  }
}

}  // namespace

void accumulate(SparseVector& v, std::size_t index, const Scalar& value) {
  if (value.is_zero()) return;
  auto [it, inserted] = v.try_emplace(index, value);
  if (!inserted) {
    it->second += value;
    if (it->second.is_zero()) v.erase(it);
  }
}

std::size_t product(std::span<const std::size_t> dims) {
  std::size_t n = 1;
  for (auto d : dims) n *= d;
  return n;
}

std::size_t flatten(std::span<const std::size_t> index, std::span<const std::size_t> dims) {
  if (index.size() != dims.size()) throw DimensionMismatch("multi-index has wrong number of legs");
  std::size_t flat = 0;
  for (std::size_t i = 0; i < dims.size(); ++i) {
    if (index[i] >= dims[i]) throw DimensionMismatch("multi-index out of range");
    flat = flat * dims[i] + index[i];
  }
  return flat;
}

MultiIndex unflatten(std::size_t flat, std::span<const std::size_t> dims) {
  MultiIndex idx(dims.size());
  for (std::size_t i = dims.size(); i-- > 0;) {
    idx[i] = flat % dims[i];
    flat /= dims[i];
  }
  return idx;
}

Operator::Operator(Field field, std::vector<std::size_t> row_dims, std::vector<std::size_t> col_dims)
    : field_(field), row_dims_(std::move(row_dims)), col_dims_(std::move(col_dims)) {
  for (auto d : row_dims_)
    if (d == 0) throw DimensionMismatch("leg dimensions must be positive");
  for (auto d : col_dims_)
    if (d == 0) throw DimensionMismatch("leg dimensions must be positive");
  rows_ = product(row_dims_);
  columns_.resize(product(col_dims_));
}

Operator Operator::identity(Field field, std::vector<std::size_t> dims) {
  Operator op(field, dims, dims);
  const Scalar one = Scalar::one(field);
  for (std::size_t i = 0; i < op.cols(); ++i) op.columns_[i].emplace_back(i, one);
  return op;
}

Operator Operator::from_entries(Field field, std::vector<std::size_t> row_dims, std::vector<std::size_t> col_dims,
                                std::vector<Entry> entries) {
  Operator op(field, std::move(row_dims), std::move(col_dims));
  for (auto& e : entries) op.accumulate(e.row, e.col, e.value);
  return op;
}

Operator Operator::kron(const Operator& a, const Operator& b) {
  require_same_field(a.field_, b.field_);
  std::vector<std::size_t> rd = a.row_dims_;
  rd.insert(rd.end(), b.row_dims_.begin(), b.row_dims_.end());
  std::vector<std::size_t> cd = a.col_dims_;
  cd.insert(cd.end(), b.col_dims_.begin(), b.col_dims_.end());
  Operator out(a.field_, std::move(rd), std::move(cd));
  for (std::size_t ca = 0; ca < a.cols(); ++ca) {
    for (std::size_t cb = 0; cb < b.cols(); ++cb) {
      auto& col = out.columns_[ca * b.cols() + cb];
      for (const auto& [ra, va] : a.columns_[ca]) {
        for (const auto& [rb, vb] : b.columns_[cb]) col.emplace_back(ra * b.rows() + rb, va * vb);
      }
    }
  }
  return out;
}

std::size_t Operator::nnz() const {
  std::size_t n = 0;
  for (const auto& c : columns_) n += c.size();
  return n;
}

Scalar Operator::at(std::size_t row, std::size_t col) const {
  if (row >= rows_ || col >= cols()) throw DimensionMismatch("operator index out of range");
  const auto& c = columns_[col];
  auto it = std::lower_bound(c.begin(), c.end(), row, [](const auto& e, std::size_t r) { return e.first < r; });
  if (it != c.end() && it->first == row) return it->second;
  return Scalar::zero(field_);
}

Scalar Operator::at(std::span<const std::size_t> row, std::span<const std::size_t> col) const {
  return at(flatten(row, row_dims_), flatten(col, col_dims_));
}

std::vector<Entry> Operator::entries() const {
  std::vector<Entry> out;
  out.reserve(nnz());
  for (std::size_t c = 0; c < cols(); ++c) {
    for (const auto& [r, v] : columns_[c]) out.push_back({r, c, v});
  }
  std::sort(out.begin(), out.end(),
            [](const Entry& a, const Entry& b) { return a.row != b.row ? a.row < b.row : a.col < b.col; });
  return out;
}

void Operator::accumulate(std::size_t row, std::size_t col, const Scalar& value) {
  if (row >= rows_ || col >= cols()) throw DimensionMismatch("operator index out of range");
  if (value.field() != field_) require_same_field(field_, value.field());
  add_sorted(columns_[col], row, value);
}

SparseVector Operator::apply(const SparseVector& v) const {
  SparseVector out;
  for (const auto& [j, x] : v) {
    if (j >= cols()) throw DimensionMismatch("vector index out of range");
    for (const auto& [i, a] : columns_[j]) pentagon::accumulate(out, i, a * x);
  }
  return out;
}

Operator Operator::operator+(const Operator& o) const {
  if (row_dims_ != o.row_dims_ || col_dims_ != o.col_dims_) throw DimensionMismatch("operator sum: shape mismatch");
  require_same_field(field_, o.field_);
  Operator out = *this;
  for (std::size_t c = 0; c < cols(); ++c) {
    for (const auto& [r, v] : o.columns_[c]) add_sorted(out.columns_[c], r, v);
  }
  return out;
}

Operator Operator::operator-(const Operator& o) const { return *this + o.scaled(-Scalar::one(o.field_)); }

Operator Operator::scaled(const Scalar& factor) const {
  require_same_field(field_, factor.field());
  Operator out(field_, row_dims_, col_dims_);
  if (factor.is_zero()) return out;
  for (std::size_t c = 0; c < cols(); ++c) {
    out.columns_[c].reserve(columns_[c].size());
    for (const auto& [r, v] : columns_[c]) out.columns_[c].emplace_back(r, v * factor);
  }
  return out;
}

Operator Operator::transpose() const {
  Operator out(field_, col_dims_, row_dims_);
  for (std::size_t c = 0; c < cols(); ++c) {
    for (const auto& [r, v] : columns_[c]) out.columns_[r].emplace_back(c, v);
  }
  return out;  // rows within each column come out sorted since c ascends
}

Operator Operator::partial_transpose(std::size_t leg) const {
  if (leg >= legs() || leg >= col_dims_.size()) throw DimensionMismatch("partial_transpose: leg out of range");
  if (row_dims_[leg] != col_dims_[leg]) throw DimensionMismatch("partial_transpose: leg is not square");
  Operator out(field_, row_dims_, col_dims_);
  for (std::size_t c = 0; c < cols(); ++c) {
    MultiIndex ci = unflatten(c, col_dims_);
    for (const auto& [r, v] : columns_[c]) {
      MultiIndex ri = unflatten(r, row_dims_);
      std::swap(ri[leg], ci[leg]);
      add_sorted(out.columns_[flatten(ci, col_dims_)], flatten(ri, row_dims_), v);
      std::swap(ri[leg], ci[leg]);
    }
  }
  return out;
}

bool Operator::is_permutation() const {
  if (rows_ != cols()) return false;
  std::vector<bool> seen(rows_, false);
  for (const auto& col : columns_) {
    if (col.size() != 1 || !col.front().second.is_one() || seen[col.front().first]) return false;
    seen[col.front().first] = true;
  }
  return true;
}

Operator compose(const Operator& a, const Operator& b) {
  if (a.col_dims_ != b.row_dims_) {
    throw DimensionMismatch("compose: " + dims_string(a.col_dims_) + " vs " + dims_string(b.row_dims_));
  }
  require_same_field(a.field_, b.field_);
  Operator out(a.field_, a.row_dims_, b.col_dims_);
  for (std::size_t c = 0; c < b.cols(); ++c) {
    SparseVector acc;
    for (const auto& [k, bv] : b.columns_[c]) {
      for (const auto& [r, av] : a.columns_[k]) accumulate(acc, r, av * bv);
    }
    auto& col = out.columns_[c];
    col.reserve(acc.size());
    for (auto& [r, v] : acc) col.emplace_back(r, std::move(v));
  }
  return out;
}

bool operator==(const Operator& a, const Operator& b) {
  return a.field_ == b.field_ && a.row_dims_ == b.row_dims_ && a.col_dims_ == b.col_dims_ &&
         a.columns_ == b.columns_;
}

PlacedOperator::PlacedOperator(Operator op, LegPlacement placement)
    : op_(std::move(op)), placement_(std::move(placement)) {
  const auto& p = placement_;
  if (p.leg_dims.size() != p.total_legs) throw DimensionMismatch("placement: leg_dims must list every leg");
  if (!op_.square_legs()) throw DimensionMismatch("placement: operator legs must be square");
  if (op_.legs() != p.target_legs.size()) {
    throw DimensionMismatch("placement: operator has " + std::to_string(op_.legs()) + " legs but " +
                            std::to_string(p.target_legs.size()) + " targets were given");
  }
  std::vector<bool> used(p.total_legs, false);
  for (std::size_t k = 0; k < p.target_legs.size(); ++k) {
    const std::size_t leg = p.target_legs[k];
    if (leg >= p.total_legs) throw DimensionMismatch("placement: target leg out of range");
    if (used[leg]) throw DimensionMismatch("placement: leg collision on leg " + std::to_string(leg));
    used[leg] = true;
    if (p.leg_dims[leg] != op_.row_dims()[k]) throw DimensionMismatch("placement: leg dimension mismatch");
  }
  strides_.assign(p.total_legs, 1);
  for (std::size_t i = p.total_legs; i-- > 1;) strides_[i - 1] = strides_[i] * p.leg_dims[i];
  space_dim_ = product(p.leg_dims);
}

void PlacedOperator::apply_basis(std::size_t basis, const Scalar& coefficient, SparseVector& out) const {
  const auto& legs = placement_.target_legs;
  const auto& dims = op_.row_dims();
  std::size_t sub = 0;
  std::size_t base = basis;
  for (std::size_t k = 0; k < legs.size(); ++k) {
    const std::size_t digit = (basis / strides_[legs[k]]) % dims[k];
    sub = sub * dims[k] + digit;
    base -= digit * strides_[legs[k]];
  }
  for (const auto& [row, value] : op_.column(sub)) {
    std::size_t target = base;
    std::size_t rest = row;
    for (std::size_t k = legs.size(); k-- > 0;) {
      target += (rest % dims[k]) * strides_[legs[k]];
      rest /= dims[k];
    }
    accumulate(out, target, value * coefficient);
  }
}

SparseVector PlacedOperator::apply(const SparseVector& v) const {
  SparseVector out;
  for (const auto& [j, x] : v) {
    if (j >= space_dim_) throw DimensionMismatch("vector index out of range");
    apply_basis(j, x, out);
  }
  return out;
}

Operator PlacedOperator::materialize() const {
  Operator out(op_.field(), placement_.leg_dims, placement_.leg_dims);
  const Scalar one = Scalar::one(op_.field());
  for (std::size_t c = 0; c < space_dim_; ++c) {
    SparseVector col;
    apply_basis(c, one, col);
    for (const auto& [r, v] : col) out.accumulate(r, c, v);
  }
  return out;
}

Operator place_on_legs(const Operator& op, const LegPlacement& placement) {
  return PlacedOperator(op, placement).materialize();
}

SlotGrouping reconstruction_grouping() {
  return SlotGrouping{{Slot{0, false}, Slot{0, true}}, {Slot{1, false}, Slot{1, true}}};
}

Operator reshuffle(const Operator& op, const SlotGrouping& grouping) {
  const std::size_t n = op.legs();
  if (op.col_dims().size() != n) throw DimensionMismatch("reshuffle: row and column leg counts differ");
  std::vector<int> seen(2 * n, 0);
  auto slot_dim = [&](const Slot& s) {
    if (s.leg >= n) throw DimensionMismatch("reshuffle: invalid grouping (leg out of range)");
    ++seen[2 * s.leg + (s.column ? 1 : 0)];
    return s.column ? op.col_dims()[s.leg] : op.row_dims()[s.leg];
  };
  std::vector<std::size_t> rd;
  std::vector<std::size_t> cd;
  for (const auto& s : grouping.row_slots) rd.push_back(slot_dim(s));
  for (const auto& s : grouping.col_slots) cd.push_back(slot_dim(s));
  for (int count : seen)
    if (count != 1) throw DimensionMismatch("reshuffle: invalid grouping (not a partition of index slots)");
  if (rd.empty() || cd.empty()) throw DimensionMismatch("reshuffle: invalid grouping (empty side)");

  Operator out(op.field(), rd, cd);
  MultiIndex ri(rd.size());
  MultiIndex ci(cd.size());
  for (const auto& e : op.entries()) {
    const MultiIndex r = unflatten(e.row, op.row_dims());
    const MultiIndex c = unflatten(e.col, op.col_dims());
    auto digit = [&](const Slot& s) { return s.column ? c[s.leg] : r[s.leg]; };
    for (std::size_t k = 0; k < rd.size(); ++k) ri[k] = digit(grouping.row_slots[k]);
    for (std::size_t k = 0; k < cd.size(); ++k) ci[k] = digit(grouping.col_slots[k]);
    out.accumulate(flatten(ri, rd), flatten(ci, cd), e.value);
  }
  return out;
}

Operator swap_operator(Field field, std::size_t dim) {
  Operator p(field, {dim, dim}, {dim, dim});
  const Scalar one = Scalar::one(field);
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j) p.accumulate(j * dim + i, i * dim + j, one);
  return p;
}

}  // namespace pentagon
