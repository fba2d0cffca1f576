#pragma once

#include <cstdint>
#include <string>

#include "hyperlab/system.hpp"

namespace hyperlab {

// {u_N^1 : N in the first `depth` tower levels} ∪ {(1,0)}
FiniteSet set_C(const System& system, const HousesConfig& cfg, int depth);
// {(1,1/n) : n <= max_level} ∪ {(1,0)}
FiniteSet set_D(const System& system, const HousesConfig& cfg, std::int64_t max_level);
// {(1,1/n) : n <= max_level} ∪ mesh points (k/mesh, 0)
FiniteSet set_H(const System& system, const HousesConfig& cfg, std::int64_t max_level, std::int64_t mesh);

struct BuiltinRequest {
  std::string name;  // "C", "D" or "H"
  int depth = 4;
  std::int64_t max_level = 32;
  std::int64_t mesh = 256;
};

// Throws ConfigError naming the available levels when a point is missing from the carrier.
FiniteSet builtin_sets(const System& system, const HousesConfig& cfg, const BuiltinRequest& request);

}  // namespace hyperlab
