#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

namespace permcodes::cli {

/// Seed used when --seed is omitted.
inline constexpr std::uint64_t kDefaultSeed = 20240611;

/// Exit codes.
inline constexpr int kExitOk = 0;
/// A constructed or supplied codebook violates its claimed distance.
inline constexpr int kExitCertificationFailure = 1;
inline constexpr int kExitUsage = 2;

/// Runs the tool with `args` (excluding argv[0]); returns the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace permcodes::cli
