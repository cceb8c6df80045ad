#pragma once

#include <cstdint>
#include <random>

#include "permcodes/perm.hpp"

namespace permcodes {

using Rng = std::mt19937_64;

/// Uniform integer in [0, bound) by rejection; independent of the standard
/// library's distribution implementations.
std::uint64_t uniform_below(Rng& rng, std::uint64_t bound);

/// Uniform permutation of {1..n} (Fisher-Yates).
Permutation random_permutation(int n, Rng& rng);

}  // namespace permcodes
