#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace fibrous::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitViolation = 1;
inline constexpr int kExitUsage = 2;

/// Runs one command. `args` excludes the program name. Input paths of "-"
/// read from `in`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, std::istream& in);

}  // namespace fibrous::cli
