#pragma once

// Block permutation codes under d_B.
//
// Non-systematic: the label map sigma -> (key of sigma's coset under the
// distance-(d+1) cyclic construction, sigma^{-1}(1)) partitions S_n into
// classes of minimum block distance >= d.
//
// Systematic: a codeword is sigma extended by the symbols n+1..n+K, inserted
// after the entries of an auxiliary sequence selected by sigma's label. The
// auxiliary sequences are Reed-Solomon codewords over F_q shifted into
// {1..q}.

#include <compare>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "permcodes/codebook.hpp"
#include "permcodes/cyclic_codes.hpp"
#include "permcodes/perm.hpp"

namespace permcodes {

struct NablaLabel {
  QuotientVector key;
  int slot = 0;

  /// "k1,...,km/s"
  std::string to_string() const;

  auto operator<=>(const NablaLabel&) const = default;
  bool operator==(const NablaLabel&) const = default;
};

class NablaMap {
 public:
  /// Requires n >= 4, d >= 4. Keys come from make_params(n, d + 1).
  NablaMap(int n, int d);

  int n() const { return params_.n; }
  int d() const { return d_; }
  std::uint32_t p() const { return params_.p; }
  const CodeParams& params() const { return params_; }

  NablaLabel operator()(const Permutation& sigma) const;

 private:
  CodeParams params_;
  int d_;
};

NablaLabel nabla(const Permutation& sigma, int n, int d);

/// All non-empty label classes of S_n, members in lexicographic order.
std::map<NablaLabel, Codebook> partition_blocks(int n, int d, std::uint64_t budget = kDefaultEnumerationBudget,
                                                unsigned workers = 1);

/// Insertion points s_1..s_K, each in {1..base}.
struct ExtensionSequence {
  int base = 0;
  std::vector<int> entries;

  std::size_t length() const { return entries.size(); }
  std::string to_string() const;

  bool operator==(const ExtensionSequence&) const = default;
};

/// Inserts n+1, ..., n+K in turn, n+m immediately after the current
/// position of s_m. Repeated insertion points therefore collect their new
/// symbols in descending order.
Permutation extend(const Permutation& sigma, const ExtensionSequence& seq);

/// Drops every value greater than n, keeping relative order.
Permutation project_information(const Permutation& codeword, int n);

/// {s1[m] : s1[m] != s2[m]}
std::set<int> hamming_set(const ExtensionSequence& s1, const ExtensionSequence& s2);

/// Reed-Solomon code RS_q[length, dimension] with evaluation points
/// 0..length-1, member values shifted by +1 into {1..q}.
class AuxiliarySet {
 public:
  /// Production instance for (n, d): q = least prime >= floor(n/2),
  /// length 3d-1, dimension 2d. Throws InvalidArgument naming the first
  /// violated hypothesis.
  static AuxiliarySet for_code(int n, int d);

  /// Unchecked instance; requires q prime, length <= q, dimension <= length,
  /// q <= base.
  AuxiliarySet(std::uint32_t q, int length, int dimension, int base);

  std::uint32_t q() const { return q_; }
  int length() const { return length_; }
  int dimension() const { return dimension_; }
  int base() const { return base_; }
  /// length - dimension + 1
  int designed_distance() const { return length_ - dimension_ + 1; }
  /// q^dimension, saturating at UINT64_MAX.
  std::uint64_t size() const { return size_; }

  /// Message t in base q (least significant digit = constant coefficient).
  ExtensionSequence member(std::uint64_t message) const;

 private:
  std::uint32_t q_;
  int length_;
  int dimension_;
  int base_;
  std::uint64_t size_;
};

/// Hypotheses for the production auxiliary set; empty when all hold.
std::vector<std::string> auxiliary_set_violations(int n, int d);

ExtensionSequence rs_auxiliary_member(int n, int d, std::uint64_t message);

class SystematicEncoder {
 public:
  SystematicEncoder(int n, int d);

  int n() const { return labels_.n(); }
  int d() const { return labels_.d(); }
  /// Codeword length n + 3d - 1.
  int codeword_length() const { return n() + aux_.length(); }
  const NablaMap& labels() const { return labels_; }
  const AuxiliarySet& auxiliary() const { return aux_; }

  /// Mixed-radix rank (sum key_i p^i) * n + (slot - 1).
  std::uint64_t message_index(const NablaLabel& label) const;
  Permutation encode(const Permutation& sigma) const;

 private:
  NablaMap labels_;
  AuxiliarySet aux_;
};

Permutation encode_systematic(const Permutation& sigma, int n, int d);

struct PairReport {
  int distance = 0;
  bool pass = false;
};

PairReport verify_pair(const Permutation& a, const Permutation& b, int d);

struct SystematicSampleReport {
  std::uint64_t random_pairs = 0;
  std::uint64_t same_label_pairs = 0;
  int min_distance_random = 0;
  /// Zero when no two sampled inputs shared a label.
  int min_distance_same_label = 0;
  std::uint64_t violations = 0;
  std::uint64_t projection_failures = 0;
};

/// Encodes `pairs` seeded random pairs of distinct inputs and checks
/// d_B >= d for each, plus every pair of sampled inputs that share a label.
SystematicSampleReport sample_systematic(const SystematicEncoder& encoder, std::uint64_t pairs, std::uint64_t seed,
                                         unsigned workers = 1);

struct AuxiliarySampleReport {
  std::uint64_t pairs = 0;
  int min_hamming_distance = 0;
  int min_hamming_set = 0;
  std::uint64_t violations = 0;
};

/// Seeded random pairs of distinct messages; a violation is a Hamming
/// distance below `d`.
AuxiliarySampleReport sample_auxiliary(const AuxiliarySet& aux, int d, std::uint64_t pairs, std::uint64_t seed,
                                       unsigned workers = 1);

struct ExtensionCheckReport {
  std::uint64_t trials = 0;
  /// d_B(E(s,S), E(t,S)) != d_B(s,t)
  std::uint64_t equality_violations = 0;
  /// d_B(E(s,S1), E(t,S2)) < |H(S1,S2)|
  std::uint64_t hamming_violations = 0;
};

/// Random (sigma, tau, S, S1, S2) with K uniform in [1, max_k].
ExtensionCheckReport check_extension_properties(int n, int max_k, std::uint64_t trials, std::uint64_t seed,
                                            unsigned workers = 1);

}  // namespace permcodes
