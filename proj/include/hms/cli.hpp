#ifndef HMS_CLI_HPP
#define HMS_CLI_HPP

#include <string>
#include <vector>

namespace hms {

// Dispatches one invocation (argv without the program name) and fills the
// standard output/error text.  Exit codes: 0 success or clean report, 1 a
// verification check failed, 2 malformed input or usage.
int run_command(const std::vector<std::string>& args, std::string& out, std::string& err);

}  // namespace hms

#endif
