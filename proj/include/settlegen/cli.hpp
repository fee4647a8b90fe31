#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace settlegen {

/// Process exit codes.
enum ExitCode : int {
  kExitOk = 0,
  kExitInput = 2,
  kExitGeneration = 3,
  kExitConsistency = 4,
};

/// Runs the command line `args` (without the program name).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace settlegen
