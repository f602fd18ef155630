#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace permuto::cli {

enum ExitCode : int {
  kExitSuccess = 0,
  kExitVerificationFailure = 1,
  kExitUsageError = 2,
};

/// Runs the command line `args` (without the program name), writing results
/// to `out` and diagnostics to `err`. Returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace permuto::cli
