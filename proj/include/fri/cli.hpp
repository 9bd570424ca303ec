#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace fri::cli {

enum ExitCode : int {
  kOk = 0,
  kInfeasible = 1,
  kInputError = 2,
  kResourceError = 3,
};

// Runs one command (arguments exclude the program name). Writes a single
// result document to `out`; usage and diagnostics go to `err`.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fri::cli
