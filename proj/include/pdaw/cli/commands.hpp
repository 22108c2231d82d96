#pragma once

#include <iosfwd>

namespace pdaw::cli {

// Process exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;  // invalid PDA, failed decode or check
inline constexpr int kExitUsage = 2;    // bad arguments or parameters
inline constexpr int kExitBudget = 3;   // a search ran out of budget

/// Environment variable giving the default --threads value.
inline constexpr const char* kThreadsEnv = "PDAW_THREADS";

/// Runs the `pdaw` command line. Output goes to `out`, diagnostics to `err`;
/// "-" as an input path reads from `in`.
int run(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err);

} // namespace pdaw::cli
