#include <gtest/gtest.h>

#include <random>

#include "hyperlab/corpus.hpp"
#include "hyperlab/entropy.hpp"
#include "hyperlab/verify.hpp"

using namespace hyperlab;

namespace {

SetFamily family_of(std::vector<FiniteSet> members) {
  SetFamily f;
  f.times.assign(members.size(), 0);
  f.members = std::move(members);
  return f;
}

// Smallest subset of the family whose n-step balls of radius eps cover it.
std::size_t optimal_spanning(const DynamicalDistances& d, std::uint64_t n, double eps) {
  const auto m = d.size();
  std::size_t best = m;
  for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << m); ++mask) {
    const auto k = static_cast<std::size_t>(__builtin_popcount(mask));
    if (k >= best) continue;
    bool covers = true;
    for (std::size_t i = 0; i < m && covers; ++i) {
      bool hit = false;
      for (std::size_t c = 0; c < m && !hit; ++c) hit = (mask >> c & 1u) && d(n, i, c) < eps;
      covers = hit;
    }
    if (covers) best = k;
  }
  return best;
}

}  // namespace

TEST(Spanning, SingleSetCountsOne) {
  const auto cyc = cycle_type_system({3});
  const auto fam = family_of({FiniteSet{vertex(cyc, 0)}});
  for (std::uint64_t n : {1u, 5u, 20u}) EXPECT_EQ(spanning_count(cyc, fam, n, 0.1), 1u);
}

TEST(Spanning, IdentityHyperspaceCountsSeven) {
  const auto id = cycle_type_system({1, 1, 1});
  const auto fam = family_of(all_subsets(id));
  for (std::uint64_t n : {1u, 4u, 9u}) EXPECT_EQ(spanning_count(id, fam, n, 0.5), 7u);
  const auto report = entropy_slope(id, fam, 12, 0.5);
  EXPECT_EQ(report.slope, 0.0);
}

TEST(Spanning, EventuallyConstantOnHouses) {
  const auto f = build_rotating_houses(HousesConfig{});
  const auto fam = random_family(f, 64, 4, 77);
  const auto report = entropy_slope(f, fam, 40, 0.1);
  for (std::size_t i = 1; i < report.counts.size(); ++i)
    EXPECT_GE(report.counts[i].second, report.counts[i - 1].second);
  EXPECT_LE(report.slope, kEntropyZeroSlope);
}

TEST(Spanning, MonotoneInEps) {
  const auto f = random_permutation_system(7, 3);
  const auto fam = family_of(all_subsets(f));
  const DynamicalDistances d(f, fam.members, 10);
  for (std::uint64_t n = 1; n <= 10; ++n) {
    std::size_t prev = fam.size() + 1;
    for (double eps : {0.05, 0.1, 0.2, 0.4, 0.8}) {
      const auto r = greedy_spanning(d, n, eps);
      EXPECT_LE(r, prev);
      prev = r;
    }
  }
}

TEST(Spanning, GreedyWithinFactorOfOptimal) {
  std::mt19937_64 rng(8);
  for (int t = 0; t < 25; ++t) {
    const auto f = random_permutation_system(4 + rng() % 5, rng());
    auto subsets = all_subsets(f);
    std::shuffle(subsets.begin(), subsets.end(), rng);
    if (subsets.size() > 12) subsets.erase(subsets.begin() + 12, subsets.end());
    const DynamicalDistances d(f, subsets, 6);
    for (std::uint64_t n : {1u, 3u, 6u})
      for (double eps : {0.1, 0.3, 0.6}) EXPECT_LE(greedy_spanning(d, n, eps), optimal_spanning(d, n, eps / 2));
  }
}

TEST(Spanning, SlopeAndExports) {
  EXPECT_DOUBLE_EQ(least_squares_slope({1, 2, 3}, {2, 4, 6}), 2.0);
  EXPECT_THROW(least_squares_slope({1}, {1}), std::invalid_argument);
  const auto id = cycle_type_system({1, 1});
  const auto report = entropy_slope(id, family_of(all_subsets(id)), 8, 0.5);
  EXPECT_EQ(counts_csv(report).substr(0, 12), "n,count\n1,3\n");
  EXPECT_TRUE(to_json(report)["entropy_zero_consistent"].get<bool>());
  EXPECT_THROW(entropy_slope(id, family_of(all_subsets(id)), 4, 0.5), std::invalid_argument);
}
