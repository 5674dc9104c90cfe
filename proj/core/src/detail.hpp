#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "pentagon/operator.hpp"
#include "pentagon/report.hpp"

namespace pentagon::detail {

std::string index_label(std::size_t flat, std::span<const std::size_t> dims);
std::string tuple_label(std::span<const std::size_t> tuple);

std::vector<std::pair<std::string, Scalar>> labelled(const SparseVector& v, std::span<const std::size_t> dims);

/// Witness for the first column where a and b differ, or nullopt if equal.
std::optional<Witness> compare_operators(std::vector<std::size_t> basis, const Operator& a, const Operator& b);

template <typename Key>
bool maps_equal(const std::map<Key, Scalar>& a, const std::map<Key, Scalar>& b) {
  return a == b;
}

}  // namespace pentagon::detail
