#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace twb::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInvalid = 1;
inline constexpr int kExitViolation = 2;

/// Runs the command line `args` (without the program name). Output goes to
/// `out`, diagnostics to `err`; `in` backs `--input -`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace twb::cli
