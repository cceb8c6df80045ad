#include <gtest/gtest.h>

#include <set>

#include "oracles.hpp"
#include "permcodes/cyclic_codes.hpp"
#include "permcodes/errors.hpp"
#include "permcodes/random.hpp"

using namespace permcodes;

namespace {

oracle::Coeffs coeffs_of(const Poly& p) { return {p.coefficients().begin(), p.coefficients().end()}; }

oracle::Line line_of(const Permutation& p) { return {p.one_line().begin(), p.one_line().end()}; }

// prod_i (x - alpha_{s(i)})^{s(i (+) 1)} mod f^2 by schoolbook arithmetic.
oracle::Coeffs product_oracle(const oracle::Line& s, const oracle::Coeffs& f, long long p) {
  const oracle::Coeffs f2 = oracle::mul(f, f, p);
  const std::size_t n = s.size();
  oracle::Coeffs acc{1};
  for (std::size_t i = 0; i < n; ++i) {
    const long long alpha = s[i] - 1;
    const oracle::Coeffs factor{(p - alpha % p) % p, 1};
    for (int e = 0; e < s[(i + 1) % n]; ++e) acc = oracle::reduce(oracle::mul(acc, factor, p), f2, p);
  }
  return acc;
}

}  // namespace

TEST(Params, FieldAndModulus) {
  const auto a = make_params(5, 4);
  EXPECT_EQ(a.p, 5u);
  EXPECT_EQ(a.f, Poly(5, {2, 0, 1}));
  EXPECT_EQ(a.alphas, (std::vector<std::uint32_t>{0, 1, 2, 3, 4}));
  const auto b = make_params(8, 4);
  EXPECT_EQ(b.p, 11u);
  EXPECT_EQ(coeffs_of(b.f), oracle::first_irreducible_quadratic(11));
  EXPECT_EQ(make_params(6, 5).f.degree(), 3);
  EXPECT_THROW(make_params(3, 4), InvalidArgument);
  EXPECT_THROW(make_params(6, 3), InvalidArgument);
  EXPECT_THROW(make_params(5, 4, Poly(5, {1, 0, 1})), InvalidArgument);
}

TEST(DeltaKey, IdentityMatchesSchoolbookOracle) {
  const auto params = make_params(5, 4);
  const auto e = Permutation::identity(5);
  const auto h = product_oracle(line_of(e), coeffs_of(params.f), 5);
  EXPECT_EQ(coeffs_of(delta_product(e, params).value()), h);
  const auto digits = oracle::quotient_digits(h, coeffs_of(params.f), 5);
  const auto key = delta_key(canonical_rep(e), params);
  ASSERT_EQ(key.coords.size(), 2u);
  EXPECT_EQ(key.coords[0], digits[0]);
  EXPECT_EQ(key.coords[1], digits[1]);
}

TEST(DeltaKey, RandomCosetsMatchOracle) {
  const auto params = make_params(7, 4);
  Rng rng(21);
  for (int trial = 0; trial < 20; ++trial) {
    const auto s = random_permutation(7, rng);
    const auto h = product_oracle(line_of(s), coeffs_of(params.f), 7);
    const auto digits = oracle::quotient_digits(h, coeffs_of(params.f), 7);
    const auto key = delta_key(s, params);
    for (std::size_t i = 0; i < digits.size(); ++i) EXPECT_EQ(key.coords[i], digits[i]);
  }
}

TEST(DeltaKey, WellDefinedOnCosets) {
  for (const auto& [n, d] : std::vector<std::pair<int, int>>{{5, 4}, {6, 5}, {9, 4}, {12, 6}}) {
    const auto params = make_params(n, d);
    Rng rng(static_cast<std::uint64_t>(n * 100 + d));
    for (int trial = 0; trial < 10; ++trial) {
      const auto s = random_permutation(n, rng);
      const auto key = delta_key(s, params);
      for (const auto& m : canonical_rep(s).members()) EXPECT_EQ(delta_key(m, params), key);
    }
  }
}

TEST(Fibers, PartitionCosetsAndMeetDistance) {
  for (const auto& [n, d] : std::vector<std::pair<int, int>>{{5, 4}, {6, 4}, {6, 5}}) {
    const auto params = make_params(n, d);
    const auto table = build_fibers(params);
    EXPECT_EQ(table.total(), coset_count(n));
    std::set<CyclicCoset> seen;
    for (const auto& [key, members] : table.fibers) {
      for (const auto& c : members) {
        EXPECT_TRUE(seen.insert(c).second);
        EXPECT_EQ(delta_key(c, params), key);
      }
      for (std::size_t i = 0; i < members.size(); ++i) {
        for (std::size_t j = i + 1; j < members.size(); ++j) EXPECT_GE(d_cyclic(members[i], members[j]), d);
      }
    }
    EXPECT_GE(table.max_fiber_size(), pigeonhole_fiber_bound(params));
  }
}

TEST(Fibers, WorkerCountDoesNotChangeTable) {
  const auto params = make_params(7, 4);
  const auto one = build_fibers(params, kDefaultEnumerationBudget, 1);
  const auto many = build_fibers(params, kDefaultEnumerationBudget, 5);
  EXPECT_EQ(one.fibers, many.fibers);
}

TEST(Fibers, BestFiberAndLookup) {
  const auto params = make_params(6, 4);
  const auto table = build_fibers(params);
  const auto best = best_fiber(table);
  EXPECT_EQ(best.size(), table.max_fiber_size());
  EXPECT_EQ(best.size(), 6u);
  EXPECT_EQ(best.metric(), Metric::cyclic);
  EXPECT_EQ(best.claimed_min_distance(), 4);
  QuotientVector missing{7, {6, 6}};
  if (!table.fibers.count(missing)) EXPECT_EQ(fiber_codebook(table, missing).size(), 0u);
  EXPECT_EQ(pigeonhole_fiber_bound(make_params(8, 4)), 42u);
}

TEST(Certify, ExactMinimumAndVacuousBooks) {
  const auto a = canonical_rep(Permutation::identity(4));
  const auto b = canonical_rep(Permutation({1, 4, 3, 2}));
  const auto book = Codebook::from_cosets(4, 4, "pair", {a, b});
  const auto cert = certify_min_distance(book);
  ASSERT_FALSE(cert.vacuous());
  EXPECT_EQ(*cert.min_distance, 4);
  EXPECT_EQ(cert.pairs, 1u);
  EXPECT_TRUE(cert.meets(4));
  EXPECT_FALSE(cert.meets(5));
  const auto single = certify_min_distance(Codebook::from_cosets(4, 4, "one", {a}));
  EXPECT_TRUE(single.vacuous());
  EXPECT_TRUE(single.meets(100));
  EXPECT_THROW(certify_min_distance(book, 0), BudgetExceeded);

  const Codebook block(Metric::block, 4, 1, "b", {Permutation::identity(4), Permutation::cycle(4)});
  EXPECT_EQ(*certify_min_distance(block).min_distance, 1);
}

TEST(Certify, MatchesPairwiseOracleOnRandomBooks) {
  Rng rng(31);
  for (int trial = 0; trial < 10; ++trial) {
    std::set<CyclicCoset> picks;
    while (picks.size() < 25) picks.insert(canonical_rep(random_permutation(8, rng)));
    const std::vector<CyclicCoset> cosets(picks.begin(), picks.end());
    int best = 100;
    for (std::size_t i = 0; i < cosets.size(); ++i) {
      for (std::size_t j = i + 1; j < cosets.size(); ++j) {
        best = std::min(best, oracle::cyclic_distance(line_of(cosets[i].canonical()), line_of(cosets[j].canonical())));
      }
    }
    const auto cert = certify_min_distance(Codebook::from_cosets(8, 1, "r", cosets), kDefaultPairBudget, 3);
    EXPECT_EQ(*cert.min_distance, best);
    EXPECT_EQ(cert.pairs, 300u);
  }
}
