#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hzent::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInvalidArguments = 2;
inline constexpr int kExitNumerical = 3;

/// Runs the command line `args` (args[0] is the program name) and returns the
/// process exit code. Results go to `out` unless --output is given; diagnostics
/// go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace hzent::cli
