#pragma once

// Cyclic block permutation codes as fibers of the key map
//
//   coset of sigma  ->  class of prod_{i in Z_n} (x - alpha_{sigma(i)})^{sigma(i (+) 1)}
//
// in G/G^p, G = (F_p[x]/(f^2))^x, deg f = d - 2, identified with F_p^{d-2}
// through quotient_map. Every non-empty fiber has minimum cyclic distance
// at least d; certify_min_distance checks that claim by exhaustive pairs.

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <vector>

#include "permcodes/algebra.hpp"
#include "permcodes/codebook.hpp"
#include "permcodes/perm.hpp"

namespace permcodes {

struct CodeParams {
  int n = 0;
  int d = 0;
  std::uint32_t p = 0;
  Poly f{2};
  /// alphas[a - 1] is the field element attached to symbol a.
  std::vector<std::uint32_t> alphas;
  std::shared_ptr<const ResidueRing> ring;
  /// (x - alpha_a)^e mod f^2 at index (a - 1) * n + (e - 1), 1 <= a, e <= n.
  std::shared_ptr<const std::vector<Poly>> factor_table;

  const Poly& factor(int symbol, int exponent) const {
    return (*factor_table)[static_cast<std::size_t>((symbol - 1) * n + (exponent - 1))];
  }
  /// Length of a key vector: deg f.
  int key_length() const { return d - 2; }
};

/// p = least prime >= n, f = find_irreducible(p, d - 2) unless overridden,
/// alpha_i = i - 1. Requires n >= 4, d >= 4.
CodeParams make_params(int n, int d, std::optional<Poly> f_override = std::nullopt);

/// The product before reduction to G/G^p, computed on the given member.
PolyResidue delta_product(const Permutation& member, const CodeParams& params);
/// Fiber key of the coset containing `member`; identical for all members.
QuotientVector delta_key(const Permutation& member, const CodeParams& params);
QuotientVector delta_key(const CyclicCoset& coset, const CodeParams& params);

/// Fibers keyed by quotient vector, each listing cosets in lexicographic order.
struct FiberTable {
  int n = 0;
  int d = 0;
  std::map<QuotientVector, std::vector<CyclicCoset>> fibers;

  std::uint64_t total() const;
  std::size_t max_fiber_size() const;
};

FiberTable build_fibers(const CodeParams& params, std::uint64_t budget = kDefaultEnumerationBudget,
                        unsigned workers = 1);

/// Codebook for the fiber with key `key` (possibly empty).
Codebook fiber_codebook(const FiberTable& table, const QuotientVector& key);
/// Largest fiber; ties go to the lexicographically smallest key.
Codebook best_fiber(const FiberTable& table);

/// ceil((n-1)! / p^(d-2))
std::uint64_t pigeonhole_fiber_bound(const CodeParams& params);

inline constexpr std::uint64_t kDefaultPairBudget = 1'000'000'000;

struct Certification {
  /// Empty when the book has fewer than two members.
  std::optional<int> min_distance;
  std::uint64_t pairs = 0;

  bool vacuous() const { return !min_distance.has_value(); }
  bool meets(int claimed) const { return vacuous() || *min_distance >= claimed; }
};

/// Exact minimum pairwise distance under the book's metric.
Certification certify_min_distance(const Codebook& book, std::uint64_t pair_budget = kDefaultPairBudget,
                                   unsigned workers = 1);

}  // namespace permcodes
