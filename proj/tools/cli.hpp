#ifndef VACT_TOOLS_CLI_HPP
#define VACT_TOOLS_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace vact::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInvalidInput = 1;
inline constexpr int kExitVerificationFailed = 2;
inline constexpr int kExitUsage = 64;

/// Runs one command. `args` excludes the program name.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

} // namespace vact::cli

#endif // VACT_TOOLS_CLI_HPP
