#pragma once

// On-disk codebooks. Text form:
//
//   # metric=cyclic|block
//   # n=<int>
//   # d=<int>
//   # label=<string>
//   <n space-separated integers>      (one member per line)
//
// Cyclic-metric members are canonical coset representatives (fixing 1).
// The structured form carries the same fields as one JSON object.

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "permcodes/perm.hpp"

namespace permcodes {

enum class Metric { cyclic, block };

std::string_view to_string(Metric m);
Metric parse_metric(std::string_view s);

class Codebook {
 public:
  /// Throws InvalidArgument on duplicate members, mixed lengths, or (cyclic
  /// metric) members that are not canonical representatives.
  Codebook(Metric metric, int n, int claimed_min_distance, std::string label,
           std::vector<Permutation> members);

  static Codebook from_cosets(int n, int claimed_min_distance, std::string label,
                              const std::vector<CyclicCoset>& cosets);

  Metric metric() const { return metric_; }
  int n() const { return n_; }
  int claimed_min_distance() const { return claimed_d_; }
  const std::string& label() const { return label_; }
  const std::vector<Permutation>& members() const { return members_; }
  std::size_t size() const { return members_.size(); }

  /// Members viewed as cosets; cyclic metric only.
  std::vector<CyclicCoset> cosets() const;

  std::string to_text() const;
  std::string to_json() const;

  /// Accepts either form; a leading '{' selects JSON.
  static Codebook parse(const std::string& content);
  static Codebook read_file(const std::filesystem::path& path);
  /// Writes the text form to `path` and the structured form to `path` + ".json".
  void write_files(const std::filesystem::path& path) const;

  bool operator==(const Codebook&) const = default;

 private:
  Metric metric_;
  int n_;
  int claimed_d_;
  std::string label_;
  std::vector<Permutation> members_;
};

}  // namespace permcodes
