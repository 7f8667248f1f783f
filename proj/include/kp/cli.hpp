#ifndef KP_CLI_HPP
#define KP_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace kp::cli {

// Dispatch one invocation.  Returns 0 on success or verified, 1 on a failed
// verification, 2 on a usage error.  `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace kp::cli

#endif
