#include "permcodes/cyclic_codes.hpp"

#include <algorithm>
#include <limits>

#include "permcodes/parallel.hpp"

namespace permcodes {

CodeParams make_params(int n, int d, std::optional<Poly> f_override) {
  if (n < 4) throw InvalidArgument("code length n must be >= 4 (got " + std::to_string(n) + ")");
  if (d < 4) throw InvalidArgument("distance d must be >= 4 (got " + std::to_string(d) + ")");
  CodeParams params;
  params.n = n;
  params.d = d;
  params.p = static_cast<std::uint32_t>(smallest_prime_geq(static_cast<std::uint64_t>(n)));
  if (f_override) {
    if (f_override->characteristic() != params.p) {
      throw InvalidArgument("modulus polynomial must be over F_" + std::to_string(params.p));
    }
    if (f_override->degree() != d - 2) {
      throw InvalidArgument("modulus polynomial must have degree d-2 = " + std::to_string(d - 2));
    }
    params.f = *f_override;
  } else {
    params.f = find_irreducible(params.p, d - 2);
  }
  params.ring = ResidueRing::create(params.f);
  params.alphas.resize(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) params.alphas[static_cast<std::size_t>(i - 1)] = static_cast<std::uint32_t>(i - 1);

  auto table = std::make_shared<std::vector<Poly>>();
  table->reserve(static_cast<std::size_t>(n * n));
  const Poly& mod = params.ring->f_squared();
  for (int a = 1; a <= n; ++a) {
    const Poly base = Poly::x_minus(params.p, params.alphas[static_cast<std::size_t>(a - 1)]) % mod;
    Poly acc = base;
    for (int e = 1; e <= n; ++e) {
      table->push_back(acc);
      acc = mul_mod(acc, base, mod);
    }
  }
  params.factor_table = std::move(table);
  return params;
}

PolyResidue delta_product(const Permutation& member, const CodeParams& params) {
  const int n = params.n;
  if (member.size() != n) {
    throw InvalidArgument("permutation length " + std::to_string(member.size()) + " does not match n=" +
                          std::to_string(n));
  }
  const Poly& mod = params.ring->f_squared();
  Poly acc = Poly::constant(params.p, 1);
  for (int i = 1; i <= n; ++i) acc = mul_mod(acc, params.factor(member(i), member(zn_wrap(i + 1, n))), mod);
  return PolyResidue(params.ring, acc);
}

QuotientVector delta_key(const Permutation& member, const CodeParams& params) {
  return quotient_map(delta_product(member, params));
}

QuotientVector delta_key(const CyclicCoset& coset, const CodeParams& params) {
  return delta_key(coset.canonical(), params);
}

std::uint64_t FiberTable::total() const {
  std::uint64_t t = 0;
  for (const auto& [key, members] : fibers) t += members.size();
  return t;
}

std::size_t FiberTable::max_fiber_size() const {
  std::size_t best = 0;
  for (const auto& [key, members] : fibers) best = std::max(best, members.size());
  return best;
}

FiberTable build_fibers(const CodeParams& params, std::uint64_t budget, unsigned workers) {
  check_coset_budget(params.n, budget);
  const std::uint64_t count = coset_count(params.n);
  const auto ranges = split_range(count, resolve_workers(workers));
  std::vector<std::map<QuotientVector, std::vector<CyclicCoset>>> partial(ranges.size());
  run_sharded(count, workers, [&](IndexRange r, std::size_t shard) {
    auto& local = partial[shard];
    for_each_coset(params.n, r.begin, r.end,
                   [&](std::uint64_t, const CyclicCoset& c) { local[delta_key(c, params)].push_back(c); });
  });
  FiberTable table{params.n, params.d, {}};
  for (auto& shard : partial) {
    for (auto& [key, members] : shard) {
      auto& dst = table.fibers[key];
      dst.insert(dst.end(), members.begin(), members.end());
    }
  }
  return table;
}

Codebook fiber_codebook(const FiberTable& table, const QuotientVector& key) {
  const auto it = table.fibers.find(key);
  static const std::vector<CyclicCoset> empty;
  return Codebook::from_cosets(table.n, table.d, key.to_string(), it == table.fibers.end() ? empty : it->second);
}

Codebook best_fiber(const FiberTable& table) {
  if (table.fibers.empty()) throw InvalidArgument("best_fiber: empty fiber table");
  auto best = table.fibers.begin();
  for (auto it = table.fibers.begin(); it != table.fibers.end(); ++it) {
    if (it->second.size() > best->second.size()) best = it;
  }
  return Codebook::from_cosets(table.n, table.d, best->first.to_string(), best->second);
}

std::uint64_t pigeonhole_fiber_bound(const CodeParams& params) {
  std::uint64_t keys = 1;
  for (int i = 0; i < params.key_length(); ++i) keys *= params.p;
  const std::uint64_t total = coset_count(params.n);
  return (total + keys - 1) / keys;
}

namespace {

// Successor table of A_c (cyclic) or A (block) for fast pairwise distances.
std::vector<int> successor_table(const Permutation& m, Metric metric) {
  const int n = m.size();
  std::vector<int> succ(static_cast<std::size_t>(n) + 1, 0);
  const int last = metric == Metric::cyclic ? n : n - 1;
  for (int i = 1; i <= last; ++i) succ[static_cast<std::size_t>(m(i))] = m(zn_wrap(i + 1, n));
  return succ;
}

}  // namespace

Certification certify_min_distance(const Codebook& book, std::uint64_t pair_budget, unsigned workers) {
  const std::uint64_t m = book.size();
  Certification out;
  if (m < 2) return out;
  out.pairs = m * (m - 1) / 2;
  if (out.pairs > pair_budget) {
    throw BudgetExceeded(std::to_string(out.pairs) + " pairwise distance evaluations exceed budget " +
                         std::to_string(pair_budget));
  }
  const int n = book.n();
  const int edges = book.metric() == Metric::cyclic ? n : n - 1;
  std::vector<std::vector<int>> tables;
  tables.reserve(static_cast<std::size_t>(m));
  for (const auto& member : book.members()) tables.push_back(successor_table(member, book.metric()));

  const auto ranges = split_range(m - 1, resolve_workers(workers));
  std::vector<int> shard_min(ranges.size(), std::numeric_limits<int>::max());
  run_sharded(m - 1, workers, [&](IndexRange r, std::size_t shard) {
    int best = std::numeric_limits<int>::max();
    for (std::uint64_t i = r.begin; i < r.end; ++i) {
      const auto& a = tables[static_cast<std::size_t>(i)];
      for (std::uint64_t j = i + 1; j < m; ++j) {
        const auto& b = tables[static_cast<std::size_t>(j)];
        int common = 0;
        for (std::size_t v = 1; v < a.size(); ++v) common += (a[v] != 0 && a[v] == b[v]);
        best = std::min(best, edges - common);
      }
    }
    shard_min[shard] = best;
  });
  out.min_distance = *std::min_element(shard_min.begin(), shard_min.end());
  return out;
}

}  // namespace permcodes
