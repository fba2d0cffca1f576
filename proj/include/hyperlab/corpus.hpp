#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hyperlab/system.hpp"

namespace hyperlab {

struct NamedSystem {
  std::string name;
  System system;
};

// Deterministic test corpus: hand-picked cycle structures plus seeded random
// permutations with planar metrics. Every system has at most 10 points.
std::vector<NamedSystem> permutation_corpus(std::uint64_t seed = 7);

// Random permutation on n points, metric from random planar positions.
System random_permutation_system(std::size_t n, std::uint64_t seed);

// Permutation whose cycles have the given lengths, discrete metric.
System cycle_type_system(const std::vector<std::size_t>& cycle_lengths);

}  // namespace hyperlab
