#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>

#include "hyperlab/corpus.hpp"
#include "hyperlab/system.hpp"

using namespace hyperlab;
namespace fs = std::filesystem;

namespace {

HousesConfig small_config() {
  HousesConfig cfg;
  cfg.levels = {4, 16};
  cfg.extra_levels = {1, 2, 3};
  cfg.circle_mesh = 8;
  return cfg;
}

fs::path scratch_dir(const std::string& name) {
  auto dir = fs::temp_directory_path() / ("hyperlab-test-" + name);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

}  // namespace

TEST(RotatingHouses, StepRotatesHousesAndFixesCircle) {
  const auto f = build_rotating_houses(HousesConfig{});
  EXPECT_EQ(f.step(house(4, 1)), house(4, 2));
  EXPECT_EQ(f.step(house(4, 3)), house(4, 0));
  EXPECT_EQ(f.step(circle_point(Rational(1, 3))), circle_point(Rational(1, 3)));
  EXPECT_EQ(f.period_of(house(16, 5)), 16u);
  EXPECT_EQ(f.period_of(circle_point(Rational(0))), 1u);
  EXPECT_EQ(f.iterate(house(65536, 3), 65536 * 3 + 10), house(65536, 13));
}

TEST(RotatingHouses, CarrierMembershipFollowsConfig) {
  const auto f = build_rotating_houses(HousesConfig{});
  EXPECT_TRUE(f.contains(house(65536, 12345)));
  EXPECT_TRUE(f.contains(house(37, 0)));
  EXPECT_FALSE(f.contains(house(65, 0)));
  EXPECT_TRUE(f.contains(circle_point(Rational(3, 256))));
  EXPECT_FALSE(f.contains(circle_point(Rational(1, 3))));
}

TEST(RotatingHouses, SmallTruncationValidates) {
  const auto f = build_rotating_houses(small_config());
  const auto report = validate(f);
  EXPECT_TRUE(report.ok);
  EXPECT_EQ(report.carrier_size, 4u + 16u + 1u + 2u + 3u + 8u);
  EXPECT_EQ(report.period_histogram.at(1), 9u);  // (1,1) and the mesh
  EXPECT_EQ(report.period_histogram.at(16), 16u);
}

TEST(RotatingHouses, OrbitsHaveExactOrder) {
  const auto f = build_rotating_houses(small_config());
  for (const auto& p : f.carrier()) {
    Point q = p;
    std::uint64_t n = 0;
    do {
      q = f.step(q);
      ++n;
    } while (q != p);
    EXPECT_EQ(n, f.period_of(p));
  }
}

TEST(RotatingHouses, ConfigErrors) {
  HousesConfig dup;
  dup.levels = {4, 4};
  EXPECT_THROW(build_rotating_houses(dup), ConfigError);
  HousesConfig big;
  big.levels = {kMaxLevel + 1};
  EXPECT_THROW(build_rotating_houses(big), ConfigError);
  HousesConfig zero;
  zero.circle_mesh = 0;
  EXPECT_THROW(build_rotating_houses(zero), ConfigError);
  EXPECT_THROW(HousesConfig::tower(6), ConfigError);
  EXPECT_EQ(HousesConfig::tower(4), (std::vector<std::int64_t>{4, 16, 256, 65536}));
}

TEST(Permutation, PeriodsFromCycles) {
  const auto three = from_permutation(3, {1, 2, 0}, DistanceTable::discrete(3));
  EXPECT_EQ(three.period_of(vertex(three, 0)), 3u);
  const auto id = from_permutation(2, {0, 1}, DistanceTable::discrete(2));
  EXPECT_EQ(id.period_of(vertex(id, 1)), 1u);
  const auto swaps = from_permutation(4, {1, 0, 3, 2}, DistanceTable::discrete(4));
  EXPECT_EQ(swaps.period_of(vertex(swaps, 2)), 2u);
  EXPECT_TRUE(validate(swaps).ok);
}

TEST(Permutation, RejectsNonPermutation) {
  EXPECT_THROW(from_permutation(3, {0, 0, 1}, DistanceTable::discrete(3)), ConfigError);
  EXPECT_THROW(from_permutation(3, {0, 1}, DistanceTable::discrete(3)), ConfigError);
  EXPECT_THROW(from_permutation(2, {0, 1}, DistanceTable::discrete(3)), ConfigError);
}

TEST(Validate, ReportsNonInjectiveMap) {
  const auto t = DistanceTable::discrete(3);
  System::Parts parts;
  parts.step = [t](const Point&) -> Point { return AbstractPoint{0, t}; };
  parts.period_of = [](const Point&) { return std::uint64_t{1}; };
  parts.contains = [](const Point&) { return true; };
  parts.enumerate = [t] {
    return std::vector<Point>{AbstractPoint{0, t}, AbstractPoint{1, t}, AbstractPoint{2, t}};
  };
  const auto report = validate(System(parts));
  EXPECT_FALSE(report.ok);
  ASSERT_FALSE(report.violations.empty());
  EXPECT_NE(report.violations.front().find("not a bijection"), std::string::npos);
}

TEST(Permutation, LoadsJsonWithMetricFile) {
  const auto dir = scratch_dir("perm");
  std::ofstream(dir / "metric.csv") << "a,b,c\n0,1,2\n1,0,1\n2,1,0\n";
  std::ofstream(dir / "sys.json") << R"({"n": 3, "images": [1, 2, 0], "metric": "metric.csv"})";
  const auto s = load_permutation_json(dir / "sys.json");
  EXPECT_EQ(s.carrier().size(), 3u);
  EXPECT_EQ(dist(vertex(s, 0), vertex(s, 2)), 2.0);
  std::ofstream(dir / "bare.json") << R"({"n": 2, "images": [1, 0]})";
  const auto bare = load_permutation_json(dir / "bare.json");
  EXPECT_EQ(dist(vertex(bare, 0), vertex(bare, 1)), 1.0);
  std::ofstream(dir / "broken.json") << R"({"images": [1, 0]})";
  try {
    load_permutation_json(dir / "broken.json");
    FAIL() << "expected ConfigError";
  } catch (const ConfigError& e) {
    EXPECT_NE(std::string(e.what()).find("'n'"), std::string::npos);
  }
}

TEST(Corpus, AtLeastTwentySmallValidSystems) {
  const auto corpus = permutation_corpus();
  EXPECT_GE(corpus.size(), 20u);
  for (const auto& [name, s] : corpus) {
    const auto report = validate(s);
    EXPECT_TRUE(report.ok) << name;
    EXPECT_LE(report.carrier_size, 10u) << name;
  }
}
