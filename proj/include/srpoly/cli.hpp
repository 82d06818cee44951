#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace srpoly {

// Runs one CLI invocation. args holds everything after the program name.
// Returns the process exit code: 0 success, 1 a verification reported
// failure, 2 usage or input error, 3 numerical non-convergence.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace srpoly
