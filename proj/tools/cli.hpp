#pragma once

#include <ostream>

namespace seiffert::cli {

// Process exit codes.
inline constexpr int kExitPass = 0;
inline constexpr int kExitContradiction = 1;
inline constexpr int kExitDomain = 2;
inline constexpr int kExitIndeterminate = 3;
inline constexpr int kExitUsage = 64;

/// Runs the command line `argv[0..argc)` writing data to `out` and
/// diagnostics to `err`; returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace seiffert::cli
