#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace wbcc {

enum ExitCode : int {
  kExitOk = 0,
  kExitDiscrepancy = 1,
  kExitUsage = 2,
};

/// Runs the command line `args` (without the program name), writing results
/// to `out` and diagnostics to `err`. Returns one of ExitCode.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace wbcc
