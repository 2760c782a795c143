#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ergo {

/// Exit statuses of the command line front end.
enum ExitCode : int { kExitOk = 0, kExitParse = 2, kExitDomain = 3, kExitBudget = 4, kExitOracle = 5 };

/// Runs one invocation; args exclude the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ergo
