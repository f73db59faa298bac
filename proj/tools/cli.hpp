#ifndef FJUMP_CLI_HPP
#define FJUMP_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace fjump::cli {

// Exit codes: 0 success/verified, 1 mathematical check failed (witness
// emitted), 2 usage or parse error, 3 resource cap exceeded.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace fjump::cli

#endif // FJUMP_CLI_HPP
