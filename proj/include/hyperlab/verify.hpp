#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include <json.hpp>

#include "hyperlab/corpus.hpp"
#include "hyperlab/hyperspace.hpp"

namespace hyperlab {

struct CheckResult {
  std::string id;
  std::string claim;
  bool passed = false;
  std::string detail;
  nlohmann::json data = nlohmann::json::object();
};

struct VerifyOptions {
  std::uint64_t seed = 20240601;
  unsigned jobs = 1;
  double tolerance = kDefaultTolerance;
};

// Every non-empty subset of a carrier with at most 16 points, in bitmask order.
std::vector<FiniteSet> all_subsets(const System& system);

// Twenty fixed circle points 3/256 turns apart, all at least 0.1 from the tower set.
std::vector<Point> default_scramble_anchors();

CheckResult check_hausdorff_axioms(std::uint64_t seed, std::size_t trials, double slack);
CheckResult check_tower_recurrence();
CheckResult check_level_set_escapes();
CheckResult check_mesh_set_progression();
CheckResult check_tower_not_syndetic();
CheckResult check_ict_matches_incompressibility(const std::vector<NamedSystem>& corpus);
CheckResult check_component_cycles(const std::vector<NamedSystem>& corpus);
CheckResult check_entropy_zero(std::uint64_t seed);
CheckResult check_scrambled_family(unsigned jobs);
CheckResult check_asymptotic_containment();
CheckResult check_odometer_laws();
CheckResult check_unique_minimal();

struct NamedCheck {
  std::string id;
  std::function<CheckResult()> run;
};

std::vector<NamedCheck> theorem_checks(const VerifyOptions& options);
nlohmann::json to_json(const CheckResult& r);

}  // namespace hyperlab
