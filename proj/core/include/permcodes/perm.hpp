#pragma once

// Permutations of {1..n} in one-line notation, cyclic arithmetic on Z_n,
// characteristic edge sets, the block and cyclic block distances, and the
// coset structure S_n / <omega> where omega = (1 2 ... n).

#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "permcodes/errors.hpp"

namespace permcodes {

/// Element of Z_n written with representatives {1, ..., n}; n stands for
/// the zero class.
class ZnElement {
 public:
  ZnElement(int value, int modulus);

  int value() const { return value_; }
  int modulus() const { return modulus_; }

  ZnElement operator+(const ZnElement& other) const;
  ZnElement operator-(const ZnElement& other) const;

  bool operator==(const ZnElement&) const = default;

 private:
  int value_;
  int modulus_;
};

/// i (+) k on {1..n}, result in {1..n}.
constexpr int zn_wrap(long long v, int n) {
  long long r = v % n;
  if (r <= 0) r += n;
  return static_cast<int>(r);
}

class CyclicCoset;

ZnElement zn_add(const ZnElement& a, const ZnElement& b);
ZnElement zn_sub(const ZnElement& a, const ZnElement& b);

class Permutation {
 public:
  Permutation() = default;

  /// Validates that `images` is a bijection of {1..n}.
  explicit Permutation(std::vector<int> images);

  static Permutation identity(int n);
  /// The n-cycle (1 2 ... n); one-line form (2, 3, ..., n, 1).
  static Permutation cycle(int n);
  /// Parses whitespace- or comma-separated one-line notation.
  static Permutation parse(const std::string& text);

  int size() const { return static_cast<int>(images_.size()); }
  /// sigma(i) for 1 <= i <= n.
  int operator()(int i) const { return images_[static_cast<std::size_t>(i - 1)]; }
  /// Position of value v, i.e. sigma^{-1}(v). O(n).
  int position_of(int v) const;

  std::span<const int> one_line() const { return images_; }
  Permutation inverse() const;
  bool is_identity() const;

  std::string to_string() const;

  auto operator<=>(const Permutation&) const = default;
  bool operator==(const Permutation&) const = default;

 private:
  struct Unchecked {};
  Permutation(std::vector<int> images, Unchecked) : images_(std::move(images)) {}
  friend Permutation compose(const Permutation&, const Permutation&);
  friend class CyclicCoset;
  friend CyclicCoset canonical_rep(const Permutation&);

  std::vector<int> images_;
};

/// (sigma o tau)(i) = sigma(tau(i)).
Permutation compose(const Permutation& sigma, const Permutation& tau);
Permutation inverse(const Permutation& sigma);

/// A set of ordered pairs (a, b) over {1..n} in which every first
/// coordinate occurs at most once. Stored as a successor table.
class EdgeSet {
 public:
  explicit EdgeSet(int n);

  int universe() const { return static_cast<int>(succ_.size()) - 1; }
  std::size_t size() const { return count_; }

  void insert(int a, int b);
  bool contains(int a, int b) const;
  /// Second coordinate of the edge leaving `a`, or 0.
  int successor(int a) const { return succ_[static_cast<std::size_t>(a)]; }

  /// |this \ other|
  std::size_t difference_size(const EdgeSet& other) const;
  std::size_t intersection_size(const EdgeSet& other) const;

  std::vector<std::pair<int, int>> edges() const;

  bool operator==(const EdgeSet&) const = default;

 private:
  std::vector<int> succ_;
  std::size_t count_ = 0;
};

/// A(sigma) = {(sigma(i), sigma(i+1)) : 1 <= i <= n-1}.
EdgeSet char_set(const Permutation& sigma);
/// A_c(sigma) = A(sigma) plus the wraparound pair (sigma(n), sigma(1)).
EdgeSet cyclic_char_set(const Permutation& sigma);

/// |A(sigma) \ A(tau)|.
int d_block(const Permutation& sigma, const Permutation& tau);

/// Left coset sigma<omega>, held by its unique member fixing 1.
class CyclicCoset {
 public:
  CyclicCoset() = default;

  /// Wraps a permutation already fixing 1; throws InvalidArgument otherwise.
  static CyclicCoset from_canonical(Permutation canonical);

  const Permutation& canonical() const { return canonical_; }
  int size() const { return canonical_.size(); }

  /// The n members canonical o omega^k, k = 0..n-1.
  std::vector<Permutation> members() const;

  auto operator<=>(const CyclicCoset&) const = default;
  bool operator==(const CyclicCoset&) const = default;

 private:
  explicit CyclicCoset(Permutation canonical) : canonical_(std::move(canonical)) {}
  friend CyclicCoset canonical_rep(const Permutation&);

  Permutation canonical_;
};

CyclicCoset canonical_rep(const Permutation& sigma);

/// |A_c(a) \ A_c(b)|; a metric on cosets.
int d_cyclic(const CyclicCoset& a, const CyclicCoset& b);
int cyclic_norm(const CyclicCoset& a);

/// sigma^{-1}(1): the slot s for which embed(canonical_rep(sigma), s) == sigma.
int coset_slot(const Permutation& sigma);
/// Member of `c` that has the value 1 at position `slot`.
Permutation embed(const CyclicCoset& c, int slot);

/// (n-1)!, saturating at UINT64_MAX.
std::uint64_t coset_count(int n);
std::uint64_t factorial(int n);

/// Default enumeration budget: 10! items.
inline constexpr std::uint64_t kDefaultEnumerationBudget = 3'628'800;

/// Throws BudgetExceeded when (n-1)! > budget.
void check_coset_budget(int n, std::uint64_t budget);

/// index-th coset (0-based) in lexicographic order of canonical one-line
/// notation.
CyclicCoset unrank_coset(int n, std::uint64_t index);
/// index-th permutation of {1..n} in lexicographic order.
Permutation unrank_permutation(int n, std::uint64_t index);

/// Visits cosets with indices in [begin, end) in lexicographic order.
void for_each_coset(int n, std::uint64_t begin, std::uint64_t end,
                    const std::function<void(std::uint64_t, const CyclicCoset&)>& fn);
/// Visits permutations with indices in [begin, end) in lexicographic order.
void for_each_permutation(int n, std::uint64_t begin, std::uint64_t end,
                          const std::function<void(std::uint64_t, const Permutation&)>& fn);

/// All (n-1)! cosets in lexicographic order.
std::vector<CyclicCoset> enumerate_cosets(int n, std::uint64_t budget = kDefaultEnumerationBudget);

}  // namespace permcodes

template <>
struct std::hash<permcodes::Permutation> {
  std::size_t operator()(const permcodes::Permutation& p) const noexcept;
};
