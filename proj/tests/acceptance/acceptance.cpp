// Acceptance run: prints one PASS/FAIL line per criterion and exits non-zero
// if any criterion fails.

#include <cstdio>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "cli/commands.hpp"
#include "oracles.hpp"
#include "permcodes/block_codes.hpp"
#include "permcodes/bounds.hpp"
#include "permcodes/cyclic_codes.hpp"
#include "permcodes/perm.hpp"

using namespace permcodes;

namespace {

constexpr std::uint64_t kSeed = 20240611;

struct Verdict {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      if (!detail.empty()) detail += "; ";
      detail += what;
    }
  }
};

oracle::Line line_of(const Permutation& p) { return {p.one_line().begin(), p.one_line().end()}; }

const std::vector<std::pair<int, int>> kFiberGrid{{5, 4}, {6, 4}, {6, 5}, {7, 4}, {8, 4}};

Verdict metric_axioms() {
  Verdict v;
  std::uint64_t triples = 0;
  for (int n = 4; n <= 6; ++n) {
    const auto cosets = enumerate_cosets(n);
    const std::size_t m = cosets.size();
    std::vector<int> dist(m * m);
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j < m; ++j) dist[i * m + j] = d_cyclic(cosets[i], cosets[j]);
    }
    for (std::size_t i = 0; i < m; ++i) {
      v.require(dist[i * m + i] == 0, "d(x,x) != 0 at n=" + std::to_string(n));
      for (std::size_t j = 0; j < m; ++j) {
        if (i != j && dist[i * m + j] <= 0) v.require(false, "d(x,y) = 0 for x != y at n=" + std::to_string(n));
        if (dist[i * m + j] != dist[j * m + i]) v.require(false, "asymmetry at n=" + std::to_string(n));
        for (std::size_t k = 0; k < m; ++k, ++triples) {
          if (dist[i * m + k] > dist[i * m + j] + dist[j * m + k]) {
            v.require(false, "triangle inequality fails at n=" + std::to_string(n));
          }
        }
      }
    }
  }
  if (v.pass) v.detail = std::to_string(triples) + " triples over n=4,5,6";
  return v;
}

Verdict coset_characterization() {
  Verdict v;
  std::uint64_t pairs = 0;
  for (int n = 2; n <= 6; ++n) {
    const auto perms = oracle::all_permutations(n);
    std::vector<EdgeSet> sets;
    for (const auto& l : perms) sets.push_back(cyclic_char_set(Permutation(l)));
    for (std::size_t i = 0; i < perms.size(); ++i) {
      for (std::size_t j = 0; j < perms.size(); ++j, ++pairs) {
        if ((sets[i] == sets[j]) != oracle::same_coset(perms[i], perms[j])) {
          v.require(false, "mismatch at n=" + std::to_string(n));
        }
      }
    }
  }
  if (v.pass) v.detail = std::to_string(pairs) + " ordered pairs, n=2..6";
  return v;
}

Verdict fiber_distance() {
  Verdict v;
  std::ostringstream info;
  for (const auto& [n, d] : kFiberGrid) {
    const auto table = build_fibers(make_params(n, d));
    std::uint64_t pairs = 0;
    int worst = n + 1;
    std::uint64_t violations = 0;
    for (const auto& [key, members] : table.fibers) {
      const auto cert = certify_min_distance(fiber_codebook(table, key));
      pairs += cert.pairs;
      if (!cert.vacuous()) worst = std::min(worst, *cert.min_distance);
      if (!cert.meets(d)) ++violations;
    }
    v.require(violations == 0, std::to_string(violations) + " fibers below d at (" + std::to_string(n) + "," +
                                   std::to_string(d) + ")");
    info << "(" << n << "," << d << "): min " << worst << " over " << pairs << " pairs ";
  }
  if (v.pass) v.detail = info.str();
  return v;
}

Verdict fiber_size() {
  Verdict v;
  std::ostringstream info;
  for (const auto& [n, d] : kFiberGrid) {
    const auto params = make_params(n, d);
    const auto largest = build_fibers(params).max_fiber_size();
    const auto bound = pigeonhole_fiber_bound(params);
    v.require(largest >= bound, "(" + std::to_string(n) + "," + std::to_string(d) + "): " + std::to_string(largest) +
                                    " < " + std::to_string(bound));
    info << "(" << n << "," << d << "): " << largest << ">=" << bound << " ";
  }
  if (v.pass) v.detail = info.str();
  return v;
}

Verdict partition() {
  Verdict v;
  const auto classes = partition_blocks(6, 4);
  std::set<Permutation> seen;
  std::uint64_t members = 0;
  int worst = 6;
  for (const auto& [label, book] : classes) {
    for (const auto& m : book.members()) {
      ++members;
      v.require(seen.insert(m).second, "permutation in two classes: " + m.to_string());
    }
    const auto& ms = book.members();
    for (std::size_t i = 0; i < ms.size(); ++i) {
      for (std::size_t j = i + 1; j < ms.size(); ++j) {
        worst = std::min(worst, oracle::block_distance(line_of(ms[i]), line_of(ms[j])));
      }
    }
  }
  v.require(members == 720 && seen.size() == 720, "classes cover " + std::to_string(seen.size()) + " of 720");
  v.require(worst >= 4, "class minimum d_B = " + std::to_string(worst));
  if (v.pass) v.detail = std::to_string(classes.size()) + " classes cover 720, min d_B " + std::to_string(worst);
  return v;
}

Verdict extension_properties() {
  Verdict v;
  for (int n = 5; n <= 9; ++n) {
    const auto rep = check_extension_properties(n, 12, 10000, kSeed + static_cast<std::uint64_t>(n));
    v.require(rep.trials == 10000, "trial count");
    v.require(rep.equality_violations == 0,
              std::to_string(rep.equality_violations) + " equality violations at n=" + std::to_string(n));
    v.require(rep.hamming_violations == 0,
              std::to_string(rep.hamming_violations) + " Hamming-set violations at n=" + std::to_string(n));
  }
  if (v.pass) v.detail = "10000 instances per n=5..9";
  return v;
}

Verdict insertion_regression() {
  Verdict v;
  const auto word = extend(Permutation({3, 2, 5, 4, 1, 8, 7, 6}), ExtensionSequence{8, {8, 2, 4, 4, 4}});
  const std::string expected = "3 2 10 5 4 13 12 11 1 8 9 7 6";
  v.require(word.to_string() == expected, "got " + word.to_string());
  if (v.pass) v.detail = word.to_string();
  return v;
}

Verdict auxiliary_set() {
  Verdict v;
  const AuxiliarySet scaled(7, 7, 4, 7);
  // Linear code: minimum distance equals minimum nonzero weight.
  int min_weight = 100;
  for (std::uint64_t t = 1; t < scaled.size(); ++t) {
    int weight = 0;
    for (int x : scaled.member(t).entries) weight += x != 1;
    min_weight = std::min(min_weight, weight);
  }
  v.require(scaled.size() == 2401, "scaled instance size " + std::to_string(scaled.size()));
  v.require(min_weight == 4, "scaled instance minimum distance " + std::to_string(min_weight));
  const auto rep = sample_auxiliary(AuxiliarySet::for_code(24, 4), 4, 100000, kSeed);
  v.require(rep.pairs == 100000 && rep.violations == 0, std::to_string(rep.violations) + " sampled violations");
  if (v.pass) {
    v.detail = "q=7 exhaustive min " + std::to_string(min_weight) + "; q=13 sampled min Hamming distance " +
               std::to_string(rep.min_hamming_distance);
  }
  return v;
}

Verdict systematic_code() {
  Verdict v;
  const SystematicEncoder enc(24, 4);
  v.require(enc.codeword_length() == 35, "codeword length " + std::to_string(enc.codeword_length()));
  const auto rep = sample_systematic(enc, 100000, kSeed);
  v.require(rep.random_pairs == 100000, "pair count");
  v.require(rep.violations == 0, std::to_string(rep.violations) + " pairs below d");
  v.require(rep.projection_failures == 0, std::to_string(rep.projection_failures) + " projection failures");
  if (v.pass) {
    v.detail = "min d_B " + std::to_string(rep.min_distance_random) + " over 100000 pairs, " +
               std::to_string(rep.same_label_pairs) + " same-label pairs";
  }
  return v;
}

Verdict sphere_bound() {
  Verdict v;
  for (int n = 3; n <= 9; ++n) {
    const auto prof = sphere_profile(n);
    for (int d = 3; d <= n; ++d) {
      v.require(static_cast<long long>(prof.sizes[static_cast<std::size_t>(d)]) >= oracle::binomial(n, d),
                "sizes[" + std::to_string(d) + "] < C(n,d) at n=" + std::to_string(n));
      const auto ws = sphere_witnesses(n, d);
      std::set<CyclicCoset> cosets;
      for (const auto& w : ws) {
        cosets.insert(w.coset);
        v.require(cyclic_char_set(Permutation::identity(n)).difference_size(cyclic_char_set(w.sigma)) ==
                          static_cast<std::size_t>(d) &&
                      removed_edge_set(n, w.subset).difference_size(cyclic_char_set(w.sigma)) ==
                          static_cast<std::size_t>(d),
                  "witness edges differ at n=" + std::to_string(n));
      }
      v.require(static_cast<long long>(ws.size()) == oracle::binomial(n, d) && cosets.size() == ws.size(),
                "witnesses not distinct at n=" + std::to_string(n) + ", d=" + std::to_string(d));
    }
  }
  v.require(sphere_profile(4).sizes == std::vector<std::uint64_t>{1, 0, 0, 4, 1}, "n=4 profile");
  if (v.pass) v.detail = "n=3..9, 3<=d<=n; n=4 profile 1 0 0 4 1";
  return v;
}

Verdict gv_comparison() {
  Verdict v;
  const auto exact = ratio_report(4, {5, 6, 7, 8, 9}, RatioMode::exact);
  std::ostringstream ratios;
  for (const auto& r : exact) {
    ratios << static_cast<double>(r.ratio) << " ";
    v.require(r.ratio > 0, "non-positive ratio at n=" + std::to_string(r.n));
  }
  v.require(ratio_non_decreasing(exact), "exact ratios decrease along n=5..9: " + ratios.str());
  std::vector<int> ns;
  for (int n = 10; n <= 10000; ++n) ns.push_back(n);
  std::uint64_t below = 0;
  for (const auto& r : ratio_report(4, ns, RatioMode::bound)) below += r.meets_floor ? 0 : 1;
  v.require(below == 0, std::to_string(below) + " bound-mode rows below C(n,3)/(2n)^2");
  if (v.pass) v.detail = "ratios " + ratios.str();
  return v;
}

std::string cli_output(std::vector<std::string> args, unsigned workers) {
  args.insert(args.begin(), {"--workers", std::to_string(workers), "--seed", std::to_string(kSeed)});
  std::ostringstream out, err;
  permcodes::cli::run(args, out, err);
  return out.str() + err.str();
}

Verdict determinism() {
  Verdict v;
  std::vector<std::vector<std::string>> runs;
  for (const auto& [n, d] : kFiberGrid) {
    runs.push_back({"construct-cyclic", "--n", std::to_string(n), "--d", std::to_string(d), "--all-fibers"});
  }
  runs.push_back({"partition", "--n", "6", "--d", "4"});
  runs.push_back({"aux-set", "--n", "24", "--d", "4", "--samples", "100000"});
  runs.push_back({"verify", "--systematic", "--n", "24", "--d", "4", "--samples", "100000"});
  for (const auto& args : runs) {
    const auto one = cli_output(args, 1);
    const auto eight = cli_output(args, 8);
    v.require(!one.empty() && one == eight, "reports differ for " + args.front());
  }
  if (v.pass) v.detail = std::to_string(runs.size()) + " reports identical at 1 and 8 workers";
  return v;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Verdict()>>> criteria{
      {"metric axioms for d_C", metric_axioms},
      {"cyclic characteristic set determines the coset", coset_characterization},
      {"fiber minimum distance", fiber_distance},
      {"fiber size pigeonhole bound", fiber_size},
      {"block partition of S_6", partition},
      {"extension distance properties", extension_properties},
      {"extension regression", insertion_regression},
      {"auxiliary set distance", auxiliary_set},
      {"systematic code", systematic_code},
      {"sphere lower bound and witnesses", sphere_bound},
      {"construction versus GV", gv_comparison},
      {"worker-count determinism", determinism},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Verdict v;
    try {
      v = criteria[i].second();
    } catch (const std::exception& e) {
      v.pass = false;
      v.detail = std::string("exception: ") + e.what();
    }
    failures += v.pass ? 0 : 1;
    std::printf("%s %2zu %s: %s\n", v.pass ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(), v.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
