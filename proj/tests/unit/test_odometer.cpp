#include <gtest/gtest.h>

#include <set>

#include "hyperlab/corpus.hpp"
#include "hyperlab/odometer.hpp"

using namespace hyperlab;

namespace {

using Bases = std::vector<std::uint32_t>;

OdometerAddress addr(Bases b, std::vector<std::uint32_t> d) { return OdometerAddress(std::move(b), std::move(d)); }

}  // namespace

TEST(OdoAdd, Examples) {
  EXPECT_EQ(odo_add(addr({2, 2}, {0, 0}), addr({2, 2}, {1, 0})), addr({2, 2}, {1, 0}));
  EXPECT_EQ(odo_add(addr({2, 2}, {1, 1}), addr({2, 2}, {1, 0})), addr({2, 2}, {0, 0}));
  EXPECT_EQ(odo_add(addr({3, 2}, {2, 1}), addr({3, 2}, {1, 0})), addr({3, 2}, {0, 0}));
  EXPECT_EQ(odo_add(addr({3, 2}, {2, 0}), addr({3, 2}, {2, 0})), addr({3, 2}, {1, 1}));
  EXPECT_THROW(odo_add(addr({2, 2}, {0, 0}), addr({3, 2}, {0, 0})), std::invalid_argument);
}

TEST(OdometerAddress, Validation) {
  EXPECT_THROW(addr({1}, {0}), std::invalid_argument);
  EXPECT_THROW(addr({2}, {2}), std::invalid_argument);
  EXPECT_THROW(addr({2, 2}, {0}), std::invalid_argument);
}

TEST(FAlpha, Examples) {
  EXPECT_EQ(f_alpha(addr({2, 2}, {0, 0})), addr({2, 2}, {1, 0}));
  EXPECT_EQ(f_alpha(addr({2}, {1})), addr({2}, {0}));
  std::vector<OdometerAddress> orbit;
  auto x = addr({2, 2}, {0, 0});
  for (int i = 0; i < 4; ++i) orbit.push_back(x = f_alpha(x));
  EXPECT_EQ(orbit, (std::vector<OdometerAddress>{addr({2, 2}, {1, 0}), addr({2, 2}, {0, 1}), addr({2, 2}, {1, 1}),
                                                  addr({2, 2}, {0, 0})}));
}

TEST(FAlpha, ZeroOrbitVisitsEveryAddress) {
  for (const Bases& b : {Bases{2, 2, 2}, Bases{3, 2}, Bases{4, 4, 16}, Bases{5, 3, 2}}) {
    const auto total = all_addresses(b).size();
    std::set<OdometerAddress> seen;
    auto x = OdometerAddress::zero(b);
    for (std::size_t i = 0; i < total; ++i) {
      seen.insert(x);
      x = f_alpha(x);
    }
    EXPECT_EQ(x, OdometerAddress::zero(b));
    EXPECT_EQ(seen.size(), total);
  }
}

TEST(OdoAdd, GroupLawsExhaustive) {
  for (const Bases& b : {Bases{2, 2, 2}, Bases{3, 2}}) {
    const auto all = all_addresses(b);
    const auto zero = OdometerAddress::zero(b);
    for (const auto& x : all) {
      EXPECT_EQ(odo_add(x, zero), x);
      for (const auto& y : all) {
        EXPECT_EQ(odo_add(x, y), odo_add(y, x));
        for (const auto& z : all) EXPECT_EQ(odo_add(odo_add(x, y), z), odo_add(x, odo_add(y, z)));
      }
    }
  }
}

TEST(DAlpha, Examples) {
  const auto x = addr({2, 2}, {1, 0});
  EXPECT_EQ(d_alpha(x, x), 0.0);
  EXPECT_EQ(d_alpha(x, addr({2, 2}, {0, 0})), 0.5);
  EXPECT_EQ(d_alpha(addr({2, 2}, {0, 1}), addr({2, 2}, {0, 0})), 0.25);
  EXPECT_THROW(d_alpha(x, addr({2}, {0})), std::invalid_argument);
}

TEST(DAlpha, MetricAxiomsExhaustive) {
  for (const Bases& b : {Bases{2}, Bases{3, 2}, Bases{2, 2, 2}, Bases{3, 2, 4}}) {
    const auto all = all_addresses(b);
    for (const auto& x : all)
      for (const auto& y : all) {
        EXPECT_EQ(d_alpha(x, y) == 0.0, x == y);
        EXPECT_EQ(d_alpha(x, y), d_alpha(y, x));
        for (const auto& z : all) EXPECT_LE(d_alpha(x, z), d_alpha(x, y) + d_alpha(y, z));
      }
  }
}

TEST(AddressOf, MixedRadix) {
  EXPECT_EQ(address_of(5, {2, 3}), addr({2, 3}, {1, 2}));
  EXPECT_EQ(address_of(6, {2, 3}), addr({2, 3}, {0, 0}));
}

TEST(SignatureMatch, PeriodFourOrbitHasTwoByTwoCylinders) {
  const auto cyc = cycle_type_system({4});
  const auto sample = omega_sample(cyc, FiniteSet{vertex(cyc, 0)}, 0, 7, 0.0);
  EXPECT_TRUE(signature_match(sample, {2, 2}, cyc, 0.5).verified_cyclic);
}

TEST(SignatureMatch, PeriodSixDoesNotRefineTwice) {
  const auto cyc = cycle_type_system({6});
  const auto sample = omega_sample(cyc, FiniteSet{vertex(cyc, 0)}, 0, 11, 0.0);
  const auto sig = signature_match(sample, {2, 2}, cyc, 0.5);
  EXPECT_FALSE(sig.verified_cyclic);
  EXPECT_FALSE(sig.failures.empty());
  EXPECT_TRUE(signature_match(sample, {2, 3}, cyc, 0.5).verified_cyclic);
}

TEST(SignatureMatch, SelfTestOnAddingMachine) {
  for (const Bases& b : {Bases{2, 2}, Bases{3, 2}, Bases{2, 2, 2}, Bases{4, 4}}) {
    const auto system = odometer_system(b);
    EXPECT_TRUE(validate(system).ok);
    const auto n = system.carrier().size();
    const auto sample = omega_sample(system, FiniteSet{Point(vertex(system, 0))}, 0, n - 1, 0.0);
    const auto sig = signature_match(sample, b, system, 0.0);
    EXPECT_TRUE(sig.verified_cyclic);
    for (std::size_t i = 0; i < sample.size(); ++i) EXPECT_EQ(sig.cylinder_assignment[i], address_of(i, b));
  }
}

TEST(SignatureMatch, SampleTooSmallNamesMinimum) {
  const auto cyc = cycle_type_system({4});
  const auto sample = omega_sample(cyc, FiniteSet{vertex(cyc, 0)}, 0, 3, 0.0);
  try {
    signature_match(sample, {2, 4}, cyc, 0.5);
    FAIL() << "expected error";
  } catch (const std::invalid_argument& e) {
    EXPECT_NE(std::string(e.what()).find("at least 8"), std::string::npos);
  }
}

TEST(SignatureMatch, JsonCarriesBases) {
  const auto j = to_json(addr({3, 2}, {2, 1}));
  EXPECT_EQ(j["bases"], nlohmann::json({3, 2}));
  EXPECT_EQ(j["digits"], nlohmann::json({2, 1}));
}
