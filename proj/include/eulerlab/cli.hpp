#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace eulerlab::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;

/// Runs one command line (without the program name). Output is
/// deterministic; see the README for commands and formats.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace eulerlab::cli
