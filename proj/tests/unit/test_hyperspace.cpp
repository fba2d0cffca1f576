#include <gtest/gtest.h>

#include <random>

#include "hyperlab/corpus.hpp"
#include "hyperlab/hyperspace.hpp"
#include "hyperlab/sets.hpp"

using namespace hyperlab;

namespace {

const Point kOne = circle_point(Rational(0));

const System& houses() {
  static const System f = build_rotating_houses(HousesConfig{});
  return f;
}

FiniteSet orbit_of(std::int64_t n) {
  std::vector<Point> pts;
  for (std::int64_t k = 0; k < n; ++k) pts.push_back(house(n, k));
  return FiniteSet(pts);
}

FiniteSet c3() { return FiniteSet{house(4, 1), house(16, 1), house(256, 1), kOne}; }

}  // namespace

TEST(InducedStep, Examples) {
  EXPECT_EQ(induced_step(houses(), FiniteSet{kOne}), FiniteSet{kOne});
  EXPECT_EQ(induced_step(houses(), FiniteSet{house(4, 1), house(4, 3)}), (FiniteSet{house(4, 2), house(4, 0)}));
  const auto id = cycle_type_system({1, 1, 1});
  const FiniteSet a{vertex(id, 0), vertex(id, 2)};
  EXPECT_EQ(induced_step(id, a), a);
}

TEST(InducedStep, OutsideCarrierIsDomainError) {
  EXPECT_THROW(induced_step(houses(), FiniteSet{house(65, 0)}), std::domain_error);
}

TEST(InducedStep, IterateMatchesRepeatedSteps) {
  auto a = c3();
  for (std::uint64_t n = 1; n <= 300; ++n) {
    a = induced_step(houses(), a);
    ASSERT_EQ(a, induced_iterate(houses(), c3(), n));
    ASSERT_EQ(a.size(), 4u);
  }
}

TEST(OrbitSeries, Examples) {
  const auto fixed = orbit_series(houses(), FiniteSet{kOne, circle_point(Rational(5, 256))}, 10);
  EXPECT_EQ(fixed.series, std::vector<double>(10, 0.0));
  EXPECT_NEAR(orbit_series(houses(), c3(), 16).at(16), 6.4e-2, 1e-3);
  const auto d8 = set_D(houses(), HousesConfig{}, 8);
  EXPECT_GE(orbit_series(houses(), d8, 4).at(1), 2.0 - 1e-12);
  const auto r = orbit_series(houses(), c3(), 256).returns_at(0.1);
  ASSERT_FALSE(r.empty());
  EXPECT_EQ(r.front(), 16u);
}

TEST(OmegaSample, Examples) {
  EXPECT_EQ(omega_sample(houses(), FiniteSet{kOne}, 0, 8, 1e-9).size(), 1u);
  const auto cyc = cycle_type_system({3});
  const auto s = omega_sample(cyc, FiniteSet{vertex(cyc, 0)}, 0, 9, 1e-9);
  ASSERT_EQ(s.size(), 3u);
  EXPECT_EQ(s.times, (std::vector<std::uint64_t>{0, 1, 2}));
  const auto sample = omega_sample(houses(), c3(), 0, 256, 0.05);
  EXPECT_TRUE(std::any_of(sample.members.begin(), sample.members.end(),
                          [](const FiniteSet& m) { return hausdorff(m, c3()) < 0.05; }));
  for (std::size_t i = 0; i < sample.size(); ++i)
    for (std::size_t j = i + 1; j < sample.size(); ++j) ASSERT_GE(hausdorff(sample.members[i], sample.members[j]), 0.05);
  EXPECT_THROW(omega_sample(houses(), c3(), 5, 5, 0.1), std::invalid_argument);
}

TEST(OmegaSample, ExactModeKeepsEveryDistinctSet) {
  const auto s = omega_sample(houses(), c3(), 0, 300, 0.0);
  EXPECT_EQ(s.size(), 256u);
}

TEST(UnionOrbit, Examples) {
  EXPECT_EQ(union_orbit(houses(), FiniteSet{kOne}, 1).set, FiniteSet{kOne});
  EXPECT_EQ(union_orbit(houses(), FiniteSet{house(4, 1)}, 4).set, orbit_of(4));
  const auto u = union_orbit(houses(), c3(), 256);
  EXPECT_TRUE(u.complete);
  EXPECT_EQ(u.set, set_union(set_union(set_union(orbit_of(4), orbit_of(16)), orbit_of(256)), FiniteSet{kOne}));
  EXPECT_EQ(induced_step(houses(), u.set), u.set);
  const auto partial = union_orbit(houses(), c3(), 100);
  EXPECT_FALSE(partial.complete);
  EXPECT_EQ(partial.required_horizon, 256u);
}

TEST(PeriodLcm, Saturates) {
  EXPECT_EQ(period_lcm(houses(), c3()), 256u);
  EXPECT_EQ(period_lcm(houses(), FiniteSet{house(3, 0), house(4, 0), house(5, 0)}), 60u);
}

TEST(SetIndex, AgreesWithBruteForce) {
  std::mt19937_64 rng(3);
  const auto sample = omega_sample(houses(), c3(), 0, 512, 0.0);
  SetIndex index(orbit_pivots(houses(), c3(), 256));
  for (const auto& m : sample.members) index.insert(m);
  for (int q = 0; q < 50; ++q) {
    const auto x = induced_iterate(houses(), c3(), rng() % 1000);
    for (double eps : {0.01, 0.05, 0.3}) {
      std::vector<std::size_t> want;
      for (std::size_t i = 0; i < sample.size(); ++i)
        if (hausdorff(x, sample.members[i]) < eps) want.push_back(i);
      EXPECT_EQ(index.within(x, eps), want);
      EXPECT_EQ(index.any_within(x, eps), !want.empty());
    }
  }
}
