#ifndef FJT_CLI_HPP_
#define FJT_CLI_HPP_

#include <iosfwd>
#include <string>
#include <vector>

namespace fjt {

// Exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitRefusal = 3;
inline constexpr int kExitInconsistent = 4;

// Runs one command; `args` excludes the program name. Reports go to `out`,
// diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fjt

#endif  // FJT_CLI_HPP_
