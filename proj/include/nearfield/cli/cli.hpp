#ifndef NEARFIELD_CLI_CLI_HPP
#define NEARFIELD_CLI_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace nearfield::cli {

// Exit-code contract of the `nearfield` tool.
inline constexpr int kExitOk = 0;
inline constexpr int kExitValidationFailed = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitDomain = 3;

/// Runs the command line `args` (args[0] is the program name). Data goes to
/// `out` (or the --out file), diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace nearfield::cli

#endif  // NEARFIELD_CLI_CLI_HPP
