#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace sggi {

// Exit codes of the command-line tool.
enum ExitCode { exit_ok = 0, exit_usage = 1, exit_invalid = 2, exit_inconclusive = 3 };

// Runs the tool on args (args[0] is the program name). Reports go to out;
// search statistics and error messages go to err.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sggi
