#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace cscrystal::cli {

enum ExitCode : int {
  kSuccess = 0,
  kMismatch = 1,
  kUsage = 2,
  kInvariantBreach = 3,
};

/// Runs the command line `args` (args[0] is the program name). All regular
/// output goes to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cscrystal::cli
