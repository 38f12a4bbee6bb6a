#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gdeutsch::cli {

enum ExitCode : int {
  kSuccess = 0,
  kCheckFailed = 1,
  kUsage = 2,
  kDegenerate = 3,
};

/// Runs the command line `args` (without the program name).
int run(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace gdeutsch::cli
