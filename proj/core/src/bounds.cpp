#include "permcodes/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "permcodes/algebra.hpp"
#include "permcodes/parallel.hpp"

namespace permcodes {

std::uint64_t SphereProfile::total() const { return std::accumulate(sizes.begin(), sizes.end(), std::uint64_t{0}); }

namespace {

template <typename Distance>
SphereProfile histogram(int n, std::uint64_t budget, unsigned workers, Distance&& dist) {
  check_coset_budget(n, budget);
  const std::uint64_t count = coset_count(n);
  const auto ranges = split_range(count, resolve_workers(workers));
  std::vector<std::vector<std::uint64_t>> partial(ranges.size(),
                                                  std::vector<std::uint64_t>(static_cast<std::size_t>(n) + 1, 0));
  run_sharded(count, workers, [&](IndexRange r, std::size_t shard) {
    auto& h = partial[shard];
    for_each_coset(n, r.begin, r.end, [&](std::uint64_t, const CyclicCoset& c) { ++h[static_cast<std::size_t>(dist(c))]; });
  });
  SphereProfile out{n, std::vector<std::uint64_t>(static_cast<std::size_t>(n) + 1, 0)};
  for (const auto& h : partial) {
    for (std::size_t r = 0; r < h.size(); ++r) out.sizes[r] += h[r];
  }
  return out;
}

}  // namespace

SphereProfile sphere_profile(int n, std::uint64_t budget, unsigned workers) {
  return histogram(n, budget, workers, [](const CyclicCoset& c) { return cyclic_norm(c); });
}

SphereProfile sphere_profile_about(const CyclicCoset& center, std::uint64_t budget, unsigned workers) {
  return histogram(center.size(), budget, workers, [&](const CyclicCoset& c) { return d_cyclic(center, c); });
}

std::uint64_t ball_size(const SphereProfile& profile, int r) {
  if (r < 0 || r > profile.n) {
    throw InvalidArgument("ball radius " + std::to_string(r) + " outside [0, " + std::to_string(profile.n) + "]");
  }
  return std::accumulate(profile.sizes.begin(), profile.sizes.begin() + r + 1, std::uint64_t{0});
}

std::uint64_t gv_bound(const SphereProfile& profile, int d) {
  const std::uint64_t ball = ball_size(profile, d - 1);
  const std::uint64_t total = profile.total();
  return (total + ball - 1) / ball;
}

std::uint64_t gv_bound(int n, int d, std::uint64_t budget, unsigned workers) {
  return gv_bound(sphere_profile(n, budget, workers), d);
}

EdgeSet removed_edge_set(int n, const std::vector<int>& subset) {
  EdgeSet out(n);
  for (int j : subset) out.insert(j, zn_wrap(j + 1, n));
  return out;
}

namespace {

// Blocks F_{j_s}: the maximal ascending run of the cycle 1 -> 2 -> ... -> n -> 1
// that ends at j_s once the edges leaving j_1..j_d are cut. F_{j_1} wraps
// around through n.
std::vector<int> run_ending_at(int n, int previous_cut, int j) {
  std::vector<int> run;
  for (int v = zn_wrap(previous_cut + 1, n);; v = zn_wrap(v + 1, n)) {
    run.push_back(v);
    if (v == j) break;
  }
  return run;
}

Permutation witness_permutation(int n, const std::vector<int>& J) {
  const int d = static_cast<int>(J.size());
  std::vector<std::vector<int>> blocks(static_cast<std::size_t>(d));
  for (int s = 0; s < d; ++s) {
    const int prev = J[static_cast<std::size_t>((s + d - 1) % d)];
    blocks[static_cast<std::size_t>(s)] = run_ending_at(n, prev, J[static_cast<std::size_t>(s)]);
  }
  // (F_{j_1}, F_{j_d}, F_{j_{d-1}}, ..., F_{j_2})
  std::vector<int> line(blocks[0]);
  for (int s = d - 1; s >= 1; --s) {
    const auto& b = blocks[static_cast<std::size_t>(s)];
    line.insert(line.end(), b.begin(), b.end());
  }
  return Permutation(std::move(line));
}

}  // namespace

std::vector<SphereWitness> sphere_witnesses(int n, int d) {
  if (d < 3 || d > n) {
    throw InvalidArgument("sphere witnesses need 3 <= d <= n (d=" + std::to_string(d) + ", n=" + std::to_string(n) + ")");
  }
  const EdgeSet identity_edges = cyclic_char_set(Permutation::identity(n));
  std::vector<SphereWitness> out;
  std::vector<int> J(static_cast<std::size_t>(d));
  std::iota(J.begin(), J.end(), 1);
  while (true) {
    Permutation sigma = witness_permutation(n, J);
    const EdgeSet mine = cyclic_char_set(sigma);
    const EdgeSet expected = removed_edge_set(n, J);
    EdgeSet removed(n);
    for (const auto& [a, b] : identity_edges.edges()) {
      if (!mine.contains(a, b)) removed.insert(a, b);
    }
    if (!(removed == expected)) {
      throw std::logic_error("sphere witness for n=" + std::to_string(n) + " misses its removed-edge set: " +
                             sigma.to_string());
    }
    auto coset = canonical_rep(sigma);
    out.push_back({J, std::move(sigma), std::move(coset)});

    // next d-subset in lexicographic order
    int i = d - 1;
    while (i >= 0 && J[static_cast<std::size_t>(i)] == n - d + i + 1) --i;
    if (i < 0) break;
    ++J[static_cast<std::size_t>(i)];
    for (int k = i + 1; k < d; ++k) J[static_cast<std::size_t>(k)] = J[static_cast<std::size_t>(k - 1)] + 1;
  }
  return out;
}

long double binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  long double r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<long double>(n - k + i) / static_cast<long double>(i);
  return std::round(r);
}

namespace {

long double log10_factorial(int n) { return std::lgamma(static_cast<long double>(n) + 1) / std::log(10.0L); }

}  // namespace

std::vector<RatioRow> ratio_report(int d, const std::vector<int>& ns, RatioMode mode, std::uint64_t budget,
                                   unsigned workers) {
  if (d < 4) throw InvalidArgument("ratio report needs d >= 4");
  std::vector<RatioRow> rows;
  for (int n : ns) {
    if (n < 4) throw InvalidArgument("ratio report needs n >= 4");
    RatioRow row;
    row.n = n;
    row.p = static_cast<std::uint32_t>(smallest_prime_geq(static_cast<std::uint64_t>(n)));
    const long double pd = std::pow(static_cast<long double>(row.p), d - 2);
    row.exact = mode == RatioMode::exact || (mode == RatioMode::automatic && n <= kExactProfileLimit);
    row.log10_construction = log10_factorial(n - 1) - std::log10(pd);
    row.floor = binomial(n, d - 1) / std::pow(2.0L * n, d - 2);
    if (row.exact) {
      if (d > n + 1) throw InvalidArgument("exact GV needs d <= n + 1");
      const auto profile = sphere_profile(n, budget, workers);
      row.gv_exact = gv_bound(profile, d);
      row.log10_gv = std::log10(static_cast<long double>(row.gv_exact));
      const long double construction = static_cast<long double>(coset_count(n)) / pd;
      row.ratio = construction / static_cast<long double>(row.gv_exact);
    } else {
      // |ball of radius d-1| >= 1 + |sphere of radius d-1| >= 1 + C(n, d-1)
      const long double ball = 1 + binomial(n, d - 1);
      row.log10_gv = log10_factorial(n - 1) - std::log10(ball);
      row.ratio = ball / pd;
    }
    row.meets_floor = row.ratio >= row.floor;
    rows.push_back(row);
  }
  return rows;
}

bool ratio_non_decreasing(const std::vector<RatioRow>& rows) {
  for (std::size_t i = 1; i < rows.size(); ++i) {
    if (rows[i].ratio < rows[i - 1].ratio) return false;
  }
  return true;
}

}  // namespace permcodes
