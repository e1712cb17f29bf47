#ifndef DENSIFY_CLI_HPP
#define DENSIFY_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace densify::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDataError = 1;
inline constexpr int kExitUsage = 2;

/// Entry point of the `densify` tool. args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace densify::cli

#endif  // DENSIFY_CLI_HPP
