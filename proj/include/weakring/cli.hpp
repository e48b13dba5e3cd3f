#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace weakring {

/// Process exit codes.
enum ExitCode : int {
  kExitOk = 0,
  kExitVerificationFailed = 1,
  kExitUsage = 2,
  kExitResource = 3,
};

/// Runs the command line `args` (program name excluded). Reports go to `out`
/// unless --output is given; diagnostics go to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace weakring
