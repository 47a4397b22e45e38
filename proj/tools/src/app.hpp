#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace bxy::cli {

enum ExitCode : int {
  kOk = 0,
  kIoError = 1,
  kDegenerate = 2,
  kConfigError = 3,
  kNumericalError = 4,
};

std::string tool_version();

/// Runs the command line `args` (without the program name) and returns the
/// process exit code. Normal output goes to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace bxy::cli
