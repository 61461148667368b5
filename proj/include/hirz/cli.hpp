#pragma once

#include <ostream>

namespace hirz::cli {

inline constexpr int kExitPass = 0;
inline constexpr int kExitClaimFailure = 1;
inline constexpr int kExitUsage = 2;

/// Entry point of the `hirz` tool: subcommands coh, cone, split, verify.
/// With no subcommand, prints the characteristic-0 symbolic replay.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace hirz::cli
