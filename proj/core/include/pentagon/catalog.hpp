#pragma once

#include <string_view>

#include "pentagon/bialgebra.hpp"

namespace pentagon {

/// Built-in examples: "trivial", "zn:<n>" (1 <= n <= 12), "s3", and
/// "dual:<name>" for the dual Hopf algebra of another built-in.
StructureConstants example_constants(std::string_view name);

}  // namespace pentagon
