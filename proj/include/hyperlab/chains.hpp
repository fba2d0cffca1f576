#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hyperlab/graph.hpp"
#include "hyperlab/hyperspace.hpp"

namespace hyperlab {

// eps <= 0 selects exact mode: "within eps" becomes equality.
bool within(const Point& p, const Point& q, double eps);

/// Edge p -> q iff dist(step(p), q) < eps.
struct ChainDigraph {
  FiniteSet vertices;
  double eps = 0;
  Adjacency edges;  // indices into vertices, ascending

  bool has_edge(std::size_t from, std::size_t to) const;
};

ChainDigraph build_digraph(const System& system, const FiniteSet& s, double eps);

// Single strongly connected component covering S; a singleton needs its self-loop.
bool is_ict(const System& system, const FiniteSet& s, double eps);
bool is_ict(const ChainDigraph& g);

inline constexpr std::size_t kWeakIncompressibilityCap = 16;

// Every proper non-empty F ⊂ S has a point within eps of f(S \ F). A
// singleton qualifies iff it is eps-fixed. Throws std::length_error past `cap`.
bool weak_incompressibility(const System& system, const FiniteSet& s, double eps,
                            std::size_t cap = kWeakIncompressibilityCap);

struct CycleDecomposition {
  std::vector<FiniteSet> components;  // in cycle order: f maps components[i] near components[i+1 mod N]
  std::size_t period = 0;
  std::vector<std::size_t> cycle_order;  // cycle_order[i] = successor of component i
  std::vector<std::string> violations;
  double eps = 0;

  bool ok() const noexcept { return violations.empty(); }
};

// Throws std::invalid_argument when S is not ICT at eps.
CycleDecomposition component_cycle(const System& system, const FiniteSet& s, double eps);

struct OrbitLimitReport {
  std::size_t period = 0;          // N of the limit candidate's cycle
  FiniteSet base_component;        // C_0, the component holding `base`
  std::vector<double> distances;   // d_H(O_{f^N}(x_k), C_0)
  std::vector<bool> complete;      // whether the f^N orbit closed within horizon
  std::optional<std::size_t> settled_from;  // first k after which every distance is < eps
  double eps = 0;
};

OrbitLimitReport orbit_limit_check(const System& system, const std::vector<Point>& orbit_points,
                                   const Point& base, const FiniteSet& limit_candidate, double eps,
                                   std::uint64_t horizon);

std::string to_dot(const ChainDigraph& g);
std::string to_json(const CycleDecomposition& d);

}  // namespace hyperlab
