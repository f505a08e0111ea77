#ifndef NETCTRL_CLI_HPP
#define NETCTRL_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace netctrl::cli {

// Exit codes: 0 success/controllable, 10 uncontrollable verdict,
// 2 input or usage error, 1 verification counterexamples.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace netctrl::cli

#endif
