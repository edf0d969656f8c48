#ifndef NILCHAR_TOOLS_CLI_HPP
#define NILCHAR_TOOLS_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace nilchar::cli {

/// Runs the command line (args excludes the program name) and returns the exit code:
/// 0 success, 1 mathematical precondition failure, 2 parse or usage error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace nilchar::cli

#endif
