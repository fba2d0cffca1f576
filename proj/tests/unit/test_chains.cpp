#include <gtest/gtest.h>

#include <random>

#include "hyperlab/chains.hpp"
#include "hyperlab/corpus.hpp"
#include "hyperlab/verify.hpp"

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

FiniteSet mesh(std::int64_t m) {
  std::vector<Point> pts;
  for (std::int64_t k = 0; k < m; ++k) pts.push_back(circle_point(Rational(k, m)));
  return FiniteSet(pts);
}

// Reference ICT: all ordered pairs joined by a chain of length >= 1, by BFS.
bool ict_by_search(const ChainDigraph& g) {
  const auto n = g.vertices.size();
  for (std::size_t s = 0; s < n; ++s) {
    std::vector<bool> seen(n, false);
    std::vector<std::size_t> todo(g.edges[s].begin(), g.edges[s].end());
    for (auto v : todo) seen[v] = true;
    while (!todo.empty()) {
      const auto v = todo.back();
      todo.pop_back();
      for (auto w : g.edges[v])
        if (!seen[w]) {
          seen[w] = true;
          todo.push_back(w);
        }
    }
    if (std::find(seen.begin(), seen.end(), false) != seen.end()) return false;
  }
  return true;
}

}  // namespace

TEST(Digraph, Examples) {
  const auto fixed = build_digraph(houses(), FiniteSet{kOne}, 0.1);
  EXPECT_TRUE(fixed.has_edge(0, 0));
  const auto u4 = build_digraph(houses(), orbit_of(4), 0.5);
  for (std::size_t i = 0; i < 4; ++i) {
    ASSERT_EQ(u4.edges[i].size(), 1u);
    EXPECT_EQ(u4.vertices[u4.edges[i][0]], houses().step(u4.vertices[i]));
  }
  const auto both = build_digraph(houses(), set_union(orbit_of(4), orbit_of(16)), 0.25);
  std::size_t cross = 0;
  for (std::size_t i = 0; i < both.vertices.size(); ++i)
    for (auto j : both.edges[i])
      if (std::get<CirclePoint>(both.vertices[i]).height != std::get<CirclePoint>(both.vertices[j]).height) ++cross;
  EXPECT_GT(cross, 0u);
}

TEST(Digraph, DotExport) {
  const auto dot = to_dot(build_digraph(houses(), orbit_of(4), 0.5));
  EXPECT_NE(dot.find("digraph chain {"), std::string::npos);
  EXPECT_NE(dot.find("v3 -> v0;"), std::string::npos);
}

TEST(Ict, Examples) {
  EXPECT_TRUE(is_ict(houses(), FiniteSet{kOne}, 0.1));
  EXPECT_FALSE(is_ict(houses(), FiniteSet{kOne, circle_point(Rational(1, 2))}, 0.1));
  EXPECT_TRUE(is_ict(houses(), orbit_of(16), 1e-6));
  EXPECT_FALSE(is_ict(houses(), FiniteSet{house(4, 0)}, 0.1));
}

TEST(Ict, SccAgreesWithPairwiseSearch) {
  std::mt19937_64 rng(17);
  for (const auto& [name, system] : permutation_corpus()) {
    const auto subsets = all_subsets(system);
    for (int t = 0; t < 40; ++t) {
      const auto& s = subsets[rng() % subsets.size()];
      for (double eps : {0.0, 0.2, 0.5, 1.5}) {
        const auto g = build_digraph(system, s, eps);
        EXPECT_EQ(is_ict(g), ict_by_search(g)) << name;
      }
    }
  }
}

TEST(Ict, MonotoneInEps) {
  for (const auto& [name, system] : permutation_corpus()) {
    for (const auto& s : all_subsets(system)) {
      bool before = false;
      for (double eps : {0.0, 0.1, 0.3, 0.6, 1.2}) {
        const bool now = is_ict(system, s, eps);
        EXPECT_TRUE(!before || now) << name;
        before = now;
      }
    }
  }
}

TEST(WeakIncompressibility, Examples) {
  const auto cyc = cycle_type_system({5});
  EXPECT_TRUE(weak_incompressibility(cyc, cyc.carrier(), 0.0));
  const auto two = cycle_type_system({3, 2});
  EXPECT_FALSE(weak_incompressibility(two, two.carrier(), 0.0));
  EXPECT_TRUE(weak_incompressibility(houses(), FiniteSet{kOne}, 0.0));
  EXPECT_FALSE(weak_incompressibility(houses(), FiniteSet{house(4, 0)}, 0.1));
}

TEST(WeakIncompressibility, RefusesAboveCap) {
  try {
    weak_incompressibility(houses(), orbit_of(256), 0.1);
    FAIL() << "expected refusal";
  } catch (const std::length_error& e) {
    EXPECT_NE(std::string(e.what()).find("cap of 16"), std::string::npos);
  }
}

TEST(WeakIncompressibility, MatchesIctOnRandomTenPointSubsets) {
  std::mt19937_64 rng(99);
  for (int t = 0; t < 30; ++t) {
    const auto system = random_permutation_system(10, rng());
    const auto subsets = all_subsets(system);
    for (int k = 0; k < 30; ++k) {
      const auto& s = subsets[rng() % subsets.size()];
      EXPECT_EQ(weak_incompressibility(system, s, 0.0), is_ict(system, s, 0.0));
      EXPECT_EQ(weak_incompressibility(system, s, 0.3), is_ict(system, s, 0.3));
    }
  }
}

TEST(ComponentCycle, Examples) {
  const auto circle = component_cycle(houses(), mesh(256), 0.05);
  EXPECT_TRUE(circle.ok());
  EXPECT_EQ(circle.period, 1u);
  const auto u4 = component_cycle(houses(), orbit_of(4), 1.0);
  EXPECT_TRUE(u4.ok());
  EXPECT_EQ(u4.period, 4u);
  for (std::size_t i = 0; i < 4; ++i) {
    ASSERT_EQ(u4.components[i].size(), 1u);
    EXPECT_EQ(houses().step(u4.components[i][0]), u4.components[(i + 1) % 4][0]);
  }
  const auto mixed = component_cycle(houses(), set_union(orbit_of(4), mesh(256)), 0.3);
  EXPECT_TRUE(mixed.ok());
  EXPECT_EQ(mixed.period, 1u);
  EXPECT_THROW(component_cycle(houses(), FiniteSet{kOne, circle_point(Rational(1, 2))}, 0.1), std::invalid_argument);
}

TEST(ComponentCycle, JsonExport) {
  const auto j = nlohmann::json::parse(to_json(component_cycle(houses(), orbit_of(4), 1.0)));
  EXPECT_EQ(j["period"], 4);
  EXPECT_EQ(j["components"].size(), 4u);
  EXPECT_EQ(j["cycle_order"], nlohmann::json({1, 2, 3, 0}));
}

TEST(ComponentCycle, PeriodDividesLcmOnRandomSystems) {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 20; ++t) {
    const auto system = random_permutation_system(8, rng());
    for (const auto& s : all_subsets(system)) {
      if (!is_ict(system, s, 0.0)) continue;
      const auto d = component_cycle(system, s, 0.0);
      EXPECT_TRUE(d.ok());
      EXPECT_EQ(period_lcm(system, s) % d.period, 0u);
    }
  }
}

TEST(ComponentCycle, StraddlingImageIsReported) {
  // 0 and 1 are 0.1 apart; f swaps 0<->2 and 1<->3, so {0,1} lands on two far components
  const auto t = DistanceTable::make(4, {0, 0.1, 1, 1, 0.1, 0, 1, 1, 1, 1, 0, 1, 1, 1, 1, 0});
  const auto f = from_permutation(4, {2, 3, 0, 1}, t);
  const auto all = f.carrier();
  ASSERT_TRUE(is_ict(f, all, 0.2));
  const auto d = component_cycle(f, all, 0.2);
  EXPECT_FALSE(d.ok());
  EXPECT_EQ(d.period, 0u);
  ASSERT_FALSE(d.violations.empty());
  EXPECT_NE(d.violations.front().find("straddles"), std::string::npos);
}

TEST(OrbitLimit, ConstantSequenceSitsOnBase) {
  const auto r = orbit_limit_check(houses(), {kOne, kOne, kOne}, kOne, FiniteSet{kOne}, 0.05, 10);
  EXPECT_EQ(r.period, 1u);
  EXPECT_EQ(r.distances, (std::vector<double>{0.0, 0.0, 0.0}));
  EXPECT_EQ(r.settled_from, 0u);
}

TEST(OrbitLimit, HouseOrbitsApproachTheCircle) {
  HousesConfig cfg;
  cfg.extra_levels = {};
  cfg.circle_mesh = 4096;
  const auto f = build_rotating_houses(cfg);
  const auto r = orbit_limit_check(f, {house(4, 0), house(16, 0), house(256, 0), house(65536, 0)}, kOne, mesh(4096),
                                   0.05, 1 << 17);
  ASSERT_EQ(r.distances.size(), 4u);
  EXPECT_GT(r.distances[0], r.distances[1]);
  EXPECT_GT(r.distances[1], r.distances[2]);
  EXPECT_GT(r.distances[2], r.distances[3]);
  EXPECT_EQ(r.settled_from, 2u);
  EXPECT_TRUE(std::all_of(r.complete.begin(), r.complete.end(), [](bool b) { return b; }));
}

TEST(OrbitLimit, AbstractTwoCycleFamily) {
  // points 0..3: two 2-cycles {0,1} and {2,3}; {2,3} sits 0.1 from {0,1}
  const auto t = DistanceTable::make(4, {0, 1, 0.1, 1, 1, 0, 1, 0.1, 0.1, 1, 0, 1, 1, 0.1, 1, 0});
  const auto f = from_permutation(4, {1, 0, 3, 2}, t);
  const FiniteSet limit{AbstractPoint{0, t}, AbstractPoint{1, t}};
  const auto r = orbit_limit_check(f, {AbstractPoint{2, t}, AbstractPoint{0, t}}, AbstractPoint{0, t}, limit, 0.05, 10);
  EXPECT_EQ(r.period, 2u);
  EXPECT_EQ(r.distances, (std::vector<double>{0.1, 0.0}));
  ASSERT_TRUE(r.settled_from);
  EXPECT_EQ(*r.settled_from, 1u);
}
