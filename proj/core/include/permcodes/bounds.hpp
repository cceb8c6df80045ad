#pragma once

// Sphere and ball volumes under d_C, the Gilbert-Varshamov benchmark,
// explicit sphere witnesses, and the construction-vs-GV ratio table.

#include <cstdint>
#include <string>
#include <vector>

#include "permcodes/perm.hpp"

namespace permcodes {

struct SphereProfile {
  int n = 0;
  /// sizes[r] = number of cosets at cyclic distance exactly r, r = 0..n.
  std::vector<std::uint64_t> sizes;

  std::uint64_t total() const;
};

/// Exhaustive profile about the identity coset.
SphereProfile sphere_profile(int n, std::uint64_t budget = kDefaultEnumerationBudget, unsigned workers = 1);
/// Exhaustive profile about an arbitrary center, by direct d_C evaluation.
SphereProfile sphere_profile_about(const CyclicCoset& center, std::uint64_t budget = kDefaultEnumerationBudget,
                                   unsigned workers = 1);

/// sizes[0] + ... + sizes[r]; requires 0 <= r <= n.
std::uint64_t ball_size(const SphereProfile& profile, int r);

/// ceil((n-1)! / |ball of radius d-1|); requires 1 <= d <= n + 1.
std::uint64_t gv_bound(const SphereProfile& profile, int d);
std::uint64_t gv_bound(int n, int d, std::uint64_t budget = kDefaultEnumerationBudget, unsigned workers = 1);

struct SphereWitness {
  /// The chosen d-subset j_1 < ... < j_d of {1..n}.
  std::vector<int> subset;
  Permutation sigma;
  CyclicCoset coset;
};

/// Edges (j, j (+) 1) for j in `subset`.
EdgeSet removed_edge_set(int n, const std::vector<int>& subset);

/// One witness per d-subset J, C(n, d) in total, in lexicographic order of
/// J. Each satisfies A_c(identity) \ A_c(sigma) = {(j, j (+) 1) : j in J};
/// a construction that misses this throws std::logic_error.
std::vector<SphereWitness> sphere_witnesses(int n, int d);

long double binomial(int n, int k);

enum class RatioMode { automatic, exact, bound };

struct RatioRow {
  int n = 0;
  std::uint32_t p = 0;
  bool exact = false;
  /// log10 of (n-1)!/p^(d-2)
  long double log10_construction = 0;
  /// log10 of the GV bound (exact ceiling, or (n-1)!/(1 + C(n, d-1)) in bound mode)
  long double log10_gv = 0;
  /// construction bound / GV bound
  long double ratio = 0;
  /// C(n, d-1) / (2n)^(d-2)
  long double floor = 0;
  bool meets_floor = false;
  /// Exact rows only.
  std::uint64_t gv_exact = 0;
};

/// Profiles up to n = 10 are enumerated in automatic mode.
inline constexpr int kExactProfileLimit = 10;

std::vector<RatioRow> ratio_report(int d, const std::vector<int>& ns, RatioMode mode = RatioMode::automatic,
                                   std::uint64_t budget = kDefaultEnumerationBudget, unsigned workers = 1);

/// True when the ratio column never decreases along `rows`.
bool ratio_non_decreasing(const std::vector<RatioRow>& rows);

}  // namespace permcodes
