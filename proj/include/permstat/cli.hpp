#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace permstat::cli {

/// Exit codes shared by every subcommand.
inline constexpr int kOk = 0;
inline constexpr int kMismatch = 1;  // failed sweep, false verdict, census mismatch
inline constexpr int kBadInput = 2;

/// Runs one command line. `args` excludes the program name. Data goes to
/// `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace permstat::cli
