#ifndef KLEINJET_CLI_HPP
#define KLEINJET_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace kleinjet::cli {

/// Exit codes: analysis completed and all checks passed.
inline constexpr int kOk = 0;
/// Analysis completed but a mathematical check failed.
inline constexpr int kCheckFailed = 1;
/// Malformed input or usage.
inline constexpr int kBadInput = 2;

/// Runs one command. `args` excludes the program name. Reports go to `out`,
/// usage text and diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace kleinjet::cli

#endif  // KLEINJET_CLI_HPP
