#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace polyapery {

/// Exit codes of the command-line front end.
enum ExitCode : int {
  kExitOk = 0,
  kExitFail = 1,
  kExitUsage = 2,
  kExitEvalError = 3,
  kExitUncertain = 4,
};

/// Runs one invocation; args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace polyapery
