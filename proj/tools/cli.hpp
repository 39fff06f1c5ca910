#ifndef RMLOCUS_TOOLS_CLI_HPP
#define RMLOCUS_TOOLS_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace rmlocus::cli {

// Exit codes: 0 all checks pass, 1 a check failed, 2 bad input.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace rmlocus::cli

#endif
