#pragma once

namespace renvol::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitInvariant = 2;
inline constexpr int kExitNumeric = 3;

/// Full command-line entry point; returns the process exit code.
/// Subcommands: formula | qprime | chern | decompose | profile | expand |
/// renvol-fit | localize | audit | grid.
int run_command(int argc, const char* const* argv);

}  // namespace renvol::cli
