#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "experiments.hpp"
#include "scenario.hpp"

using namespace hyperlab;
using namespace hyperlab::cli;
using nlohmann::json;

namespace {

std::string error_of(const json& raw) {
  try {
    parse_scenario(raw, {});
  } catch (const ConfigError& e) {
    return e.what();
  }
  return "";
}

json minimal_orbit() {
  return {{"system", {{"rotating_houses", json::object()}}},
          {"experiment", "orbit-series"},
          {"parameters", {{"set", {{"builtin", "C"}, {"depth", 2}}}, {"horizon", 20}}},
          {"output", "unused"}};
}

std::filesystem::path scratch(const std::string& name) {
  auto dir = std::filesystem::temp_directory_path() / ("hyperlab_test_cli_" + name);
  std::filesystem::remove_all(dir);
  return dir;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST(ScenarioParse, MissingTopLevelFieldsAreNamed) {
  for (const char* key : {"system", "experiment", "parameters"}) {
    auto raw = minimal_orbit();
    raw.erase(key);
    EXPECT_EQ(error_of(raw), std::string("missing field '") + key + "'");
  }
}

TEST(ScenarioParse, RejectsUnknownExperimentAndFields) {
  auto raw = minimal_orbit();
  raw["experiment"] = "orbit-seires";
  EXPECT_NE(error_of(raw).find("unknown experiment 'orbit-seires'"), std::string::npos);
  raw = minimal_orbit();
  raw["outptu"] = "x";
  EXPECT_EQ(error_of(raw), "unknown field 'outptu'");
  raw = minimal_orbit();
  raw["system"]["rotating_houses"]["mesh"] = 4;
  EXPECT_EQ(error_of(raw), "unknown field 'system.rotating_houses.mesh'");
}

TEST(ScenarioParse, SystemNeedsExactlyOneKind) {
  auto raw = minimal_orbit();
  raw["system"]["odometer"] = {{"bases", {2, 2}}};
  EXPECT_NE(error_of(raw).find("exactly one"), std::string::npos);
  raw = minimal_orbit();
  raw["system"] = {{"permutation", "/nonexistent/perm.json"}};
  EXPECT_NE(error_of(raw).find("does not exist"), std::string::npos);
}

TEST(ScenarioParse, LevelRangesExpand) {
  auto raw = minimal_orbit();
  raw["system"]["rotating_houses"] = {{"levels", json::array()}, {"extra_levels", {{"from", 3}, {"to", 6}}}, {"circle_mesh", 8}};
  const auto s = parse_scenario(raw, {});
  EXPECT_TRUE(s.system.rotating_houses.levels.empty());
  EXPECT_EQ(s.system.rotating_houses.extra_levels, (std::vector<std::int64_t>{3, 4, 5, 6}));
  EXPECT_EQ(s.system.rotating_houses.circle_mesh, 8);
}

TEST(ScenarioParse, HashIgnoresKeyOrderButNotValues) {
  const auto a = parse_scenario(minimal_orbit(), {});
  auto reordered = json::parse(R"({"output":"unused","parameters":{"horizon":20,"set":{"depth":2,"builtin":"C"}},
                                   "experiment":"orbit-series","system":{"rotating_houses":{}}})");
  EXPECT_EQ(parse_scenario(reordered, {}).hash, a.hash);
  auto changed = minimal_orbit();
  changed["parameters"]["horizon"] = 21;
  EXPECT_NE(parse_scenario(changed, {}).hash, a.hash);
  EXPECT_EQ(a.hash.size(), 16u);
}

TEST(SetSpec, PartsAreUnited) {
  SystemSpec spec;
  spec.rotating_houses = HousesConfig{{4, 16}, {1, 2}, 8};
  const auto system = make_system(spec);
  const json j = {{"houses", {{4, 1}}}, {"circle", {{1, 8}, {0, 1}}}, {"orbits", {2}}};
  const auto s = read_set(j, "parameters.set", system, spec);
  EXPECT_EQ(s.size(), 5u);
  EXPECT_TRUE(s.contains(house(4, 1)));
  EXPECT_TRUE(s.contains(house(2, 1)));
  EXPECT_TRUE(s.contains(circle_point(Rational(1, 8))));
}

TEST(SetSpec, ErrorsNameTheField) {
  SystemSpec spec;
  spec.rotating_houses = HousesConfig{{4, 16}, {1, 2}, 8};
  const auto system = make_system(spec);
  auto msg = [&](const json& j) {
    try {
      read_set(j, "parameters.a", system, spec);
    } catch (const ConfigError& e) {
      return std::string(e.what());
    }
    return std::string();
  };
  EXPECT_NE(msg({{"houses", {{256, 1}}}}).find("parameters.a.houses"), std::string::npos);
  EXPECT_NE(msg({{"circle", {{1, 3}}}}).find("not in the carrier"), std::string::npos);
  EXPECT_NE(msg({{"vertices", {0}}}).find("needs a permutation or odometer system"), std::string::npos);
  EXPECT_NE(msg(json::object()).find("empty set"), std::string::npos);
  EXPECT_NE(msg({{"builtin", "C"}, {"depth", 3}}).find("available levels"), std::string::npos);
}

TEST(RunScenario, WritesReportWithHashAndSeed) {
  const auto dir = scratch("report");
  auto s = parse_scenario(minimal_orbit(), {});
  RunOptions opts;
  opts.out = dir;
  opts.seed = 99;
  const auto r = run_scenario(s, opts);
  EXPECT_EQ(r.exit_code, kOk);
  const auto report = json::parse(slurp(dir / "report.json"));
  EXPECT_EQ(report["scenario_hash"], s.hash);
  EXPECT_EQ(report["seed"], 99);
  EXPECT_EQ(report["status"], "ok");
  const auto csv = slurp(dir / "series.csv");
  EXPECT_EQ(csv.rfind("# scenario " + s.hash + " seed 99\nn,dH\n", 0), 0u);
  EXPECT_EQ(csv.find('\r'), std::string::npos);
  EXPECT_FALSE(std::filesystem::exists(dir / "report.json.tmp"));
}

TEST(RunScenario, ExpectationsDriveExitCode) {
  auto raw = minimal_orbit();
  raw["parameters"]["expect"] = {{"argmin", 16}, {"min", {{"lt", 0.5}}}};
  RunOptions opts;
  opts.out = scratch("expect_ok");
  EXPECT_EQ(run_scenario(parse_scenario(raw, {}), opts).exit_code, kOk);

  raw["parameters"]["expect"] = {{"argmin", 4}};
  opts.out = scratch("expect_bad");
  const auto r = run_scenario(parse_scenario(raw, {}), opts);
  EXPECT_EQ(r.exit_code, kShadowViolated);
  ASSERT_EQ(r.messages.size(), 1u);
  EXPECT_NE(r.messages[0].find("expectation argmin failed"), std::string::npos);
  const auto report = json::parse(slurp(*opts.out / "report.json"));
  EXPECT_EQ(report["status"], "violated");
}

TEST(RunScenario, ExpectationOnMissingKeyIsConfigError) {
  auto raw = minimal_orbit();
  raw["parameters"]["expect"] = {{"no_such_key", true}};
  RunOptions opts;
  opts.out = scratch("expect_missing");
  EXPECT_THROW(run_scenario(parse_scenario(raw, {}), opts), ConfigError);
}

TEST(RunScenario, ComponentCycleViolationExitsTwo) {
  // 0 and 1 are close, f swaps 0<->2 and 1<->3: the component {0,1} lands on two components
  const auto dir = scratch("perm");
  std::filesystem::create_directories(dir);
  {
    std::ofstream(dir / "perm.json") << R"({"n": 4, "images": [2, 3, 0, 1], "metric": "perm.csv"})";
    std::ofstream(dir / "perm.csv") << ",a,b,c,d\na,0,0.1,1,1\nb,0.1,0,1,1\nc,1,1,0,1\nd,1,1,1,0\n";
  }
  const json raw = {{"system", {{"permutation", "perm.json"}}},
                    {"experiment", "component-cycle"},
                    {"parameters", {{"set", {{"vertices", {0, 1, 2, 3}}}}, {"eps", 0.2}}},
                    {"output", (dir / "out").string()}};
  const auto r = run_scenario(parse_scenario(raw, dir / "scenario.json"), RunOptions{});
  EXPECT_EQ(r.exit_code, kShadowViolated);
  EXPECT_FALSE(r.messages.empty());
}

TEST(RunScenario, FileRunnerMapsErrorsToExitOne) {
  const auto r = run_scenario_file(std::filesystem::path(HYPERLAB_CLI_CASES) / "missing_set.json", "orbit-series",
                                   RunOptions{});
  EXPECT_EQ(r.exit_code, kConfigError);
  ASSERT_EQ(r.messages.size(), 1u);
  EXPECT_NE(r.messages[0].find("missing field 'parameters.set'"), std::string::npos);
}

TEST(RunScenario, ShippedScenariosParse) {
  std::size_t n = 0;
  for (const auto& e : std::filesystem::directory_iterator(HYPERLAB_SCENARIOS)) {
    if (e.path().extension() != ".json") continue;
    EXPECT_NO_THROW(load_scenario(e.path())) << e.path();
    ++n;
  }
  EXPECT_GE(n, 11u);
}
