#include "hyperlab/sets.hpp"

#include <algorithm>

namespace hyperlab {

namespace {

std::string available_levels(const HousesConfig& cfg) {
  std::vector<std::int64_t> all = cfg.levels;
  all.insert(all.end(), cfg.extra_levels.begin(), cfg.extra_levels.end());
  std::sort(all.begin(), all.end());
  all.erase(std::unique(all.begin(), all.end()), all.end());
  std::string out;
  for (auto n : all) out += (out.empty() ? "" : ", ") + std::to_string(n);
  return "available levels: " + out + "; circle mesh " + std::to_string(cfg.circle_mesh);
}

FiniteSet checked(const System& system, const HousesConfig& cfg, std::vector<Point> pts, const std::string& name) {
  for (const auto& p : pts)
    if (!system.contains(p))
      throw ConfigError("set " + name + ": " + to_string(p) + " is not in the carrier (" + available_levels(cfg) + ")");
  return FiniteSet(std::move(pts));
}

}  // namespace

FiniteSet set_C(const System& system, const HousesConfig& cfg, int depth) {
  if (depth < 1) throw ConfigError("set C: depth must be >= 1");
  std::vector<Point> pts{circle_point(Rational(0))};
  for (auto n : HousesConfig::tower(depth)) pts.push_back(house(n, 1));
  return checked(system, cfg, std::move(pts), "C");
}

FiniteSet set_D(const System& system, const HousesConfig& cfg, std::int64_t max_level) {
  if (max_level < 1) throw ConfigError("set D: max_level must be >= 1");
  std::vector<Point> pts{circle_point(Rational(0))};
  for (std::int64_t n = 1; n <= max_level; ++n) pts.push_back(house(n, 0));
  return checked(system, cfg, std::move(pts), "D");
}

FiniteSet set_H(const System& system, const HousesConfig& cfg, std::int64_t max_level, std::int64_t mesh) {
  if (max_level < 1) throw ConfigError("set H: max_level must be >= 1");
  if (mesh < 1) throw ConfigError("set H: mesh must be >= 1");
  std::vector<Point> pts;
  for (std::int64_t n = 1; n <= max_level; ++n) pts.push_back(house(n, 0));
  for (std::int64_t k = 0; k < mesh; ++k) pts.push_back(circle_point(Rational(k, mesh)));
  return checked(system, cfg, std::move(pts), "H");
}

FiniteSet builtin_sets(const System& system, const HousesConfig& cfg, const BuiltinRequest& request) {
  if (request.name == "C") return set_C(system, cfg, request.depth);
  if (request.name == "D") return set_D(system, cfg, request.max_level);
  if (request.name == "H") return set_H(system, cfg, request.max_level, request.mesh);
  throw ConfigError("unknown builtin set '" + request.name + "' (expected C, D or H)");
}

}  // namespace hyperlab
