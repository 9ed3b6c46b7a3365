#ifndef RAAG_CLI_HPP
#define RAAG_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace raag {

/// Run the command-line front end.  Returns the process exit code:
/// 0 success, 1 input validation failure, 2 usage error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace raag

#endif
