#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace twistforge {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInternal = 1;
inline constexpr int kExitUsage = 2;

/// Runs one subcommand. args excludes the program name. Reports go to out,
/// diagnostics to err. Returns 0, 2 on invalid input, 1 otherwise.
int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace twistforge
