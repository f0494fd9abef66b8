#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace hypermatch::tools {

enum ExitCode : int {
    kExitOk = 0,
    kExitAssertion = 1,
    kExitUsage = 2,
    kExitBudget = 3,
};

/// Runs the hypermatch command line; args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hypermatch::tools
