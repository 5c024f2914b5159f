#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace tourney::cli {

inline constexpr int kExitOk = 0;
/// Verification failed or a scan found a separating witness.
inline constexpr int kExitFinding = 1;
/// Usage error, malformed or invalid input file.
inline constexpr int kExitUsage = 2;

/// Runs the command line `args` (args[0] is the program name). "-" as a
/// file argument means stdin / stdout.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace tourney::cli
