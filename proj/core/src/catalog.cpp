#include "pentagon/catalog.hpp"

#include <charconv>
#include <string>

#include "pentagon/errors.hpp"

namespace pentagon {

StructureConstants example_constants(std::string_view name) {
  if (name == "trivial") return group_algebra(cyclic_group_table(1));
  if (name == "s3") return group_algebra(symmetric3_table());
  if (name.starts_with("dual:")) return dual_bialgebra(example_constants(name.substr(5)));
  if (name.starts_with("zn:")) {
    const std::string_view digits = name.substr(3);
    std::size_t n = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), n);
    if (ec != std::errc() || ptr != digits.data() + digits.size() || n < 1 || n > 12) {
      throw Error("invalid example '" + std::string(name) + "': zn:<n> requires 1 <= n <= 12");
    }
    return group_algebra(cyclic_group_table(n));
  }
  throw Error("unknown example '" + std::string(name) + "' (expected trivial, zn:<n>, s3, dual:<name>)");
}

}  // namespace pentagon
