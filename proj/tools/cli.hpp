#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace opsqft::cli {

enum ExitCode : int {
  kSuccess = 0,
  kVerificationFailure = 1,
  kUsageError = 2,
  kIoError = 3,
};

/// Runs the command line `args` (args[0] is the program name). Normal output
/// goes to out, diagnostics to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace opsqft::cli
