#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace pentagon::cli {

inline constexpr int kOk = 0;
inline constexpr int kRelationFailed = 1;
inline constexpr int kInputError = 2;

/// Runs one command. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace pentagon::cli
