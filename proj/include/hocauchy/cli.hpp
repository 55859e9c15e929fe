#ifndef HOCAUCHY_CLI_HPP
#define HOCAUCHY_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace hocauchy {

// Exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitVerificationFailed = 1;
inline constexpr int kExitUsage = 2;

/// Runs one command. `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hocauchy

#endif  // HOCAUCHY_CLI_HPP
