#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace nonarch::cli {

/// Exit codes of the tool.
inline constexpr int kOk = 0;
inline constexpr int kUsage = 2;
inline constexpr int kPrecision = 3;
inline constexpr int kMathFailure = 4;

/// Parses `args` (without the program name), runs one subcommand and writes
/// its JSON report to `out`. Errors go to `err` as JSON as well.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace nonarch::cli
