#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace theta::cli {

inline constexpr int exit_ok = 0;
inline constexpr int exit_failure = 1;
inline constexpr int exit_usage = 2;

/// Runs the command line `args` (without the program name). Reports go to
/// `out`, diagnostics to `err`. Returns 0 on success, 1 when a verification
/// fails, 2 on a usage error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace theta::cli
