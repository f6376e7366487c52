#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace catchain {

// Process exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitInconsistent = 2;
inline constexpr int kExitConjectureMiss = 3;

/// Entry point of the `catchain` tool; args excludes the program name.
/// Subcommands: bound, witness, verify, grid, poly.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace catchain
