#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "hyperlab/system.hpp"

namespace hyperlab {

/// n ↦ d_H(f^n(A), A) for n = 1..horizon.
struct ReturnStats {
  std::uint64_t horizon = 0;
  std::vector<double> series;  // series[n-1]

  double at(std::uint64_t n) const { return series.at(n - 1); }
  std::vector<std::uint64_t> returns_at(double eps) const;
};

/// Hyperspace sample with pairwise Hausdorff separation >= tolerance.
/// times[i] is the first orbit time at which members[i] was seen.
struct SetFamily {
  std::vector<FiniteSet> members;
  std::vector<std::uint64_t> times;
  double tolerance = kDefaultTolerance;

  std::size_t size() const noexcept { return members.size(); }
};

/// Exact range search in (2^X, d_H): candidates are pruned with the triangle
/// inequality against a few pivot sets, survivors are compared directly.
class SetIndex {
 public:
  explicit SetIndex(std::vector<FiniteSet> pivots);

  std::size_t insert(FiniteSet s);
  std::size_t size() const noexcept { return sets_.size(); }
  const FiniteSet& operator[](std::size_t i) const { return sets_[i]; }

  // Indices i with d_H(x, set i) < eps, ascending.
  std::vector<std::size_t> within(const FiniteSet& x, double eps) const;
  bool any_within(const FiniteSet& x, double eps) const;

 private:
  template <class Visit>
  void scan(const FiniteSet& x, double eps, Visit&& visit) const;

  std::vector<FiniteSet> pivots_;
  std::vector<FiniteSet> sets_;
  std::vector<std::vector<double>> to_pivot_;  // to_pivot_[i][k] = d_H(set i, pivot k)
  std::multimap<double, std::size_t> by_first_;
};

// Pivots for a SetIndex over the orbit of A: f^{jh/count}(A), j < count.
std::vector<FiniteSet> orbit_pivots(const System& system, const FiniteSet& a, std::uint64_t horizon,
                                    std::size_t count = 4);

// 2^f(A) = f(A). Throws std::domain_error if A leaves the carrier.
FiniteSet induced_step(const System& system, const FiniteSet& a);
// f^m(A), using the system's closed-form iterate.
FiniteSet induced_iterate(const System& system, const FiniteSet& a, std::uint64_t m);

ReturnStats orbit_series(const System& system, const FiniteSet& a, std::uint64_t horizon);

// f^n(A) for burn_in <= n <= horizon, first-seen clustering at Hausdorff scale eps.
SetFamily omega_sample(const System& system, const FiniteSet& a, std::uint64_t burn_in, std::uint64_t horizon,
                       double eps);

struct OrbitUnion {
  FiniteSet set;
  bool complete = true;  // false when horizon < lcm of the periods in A
  std::uint64_t required_horizon = 0;
};

// ∪_{0<=n<horizon} f^n(A).
OrbitUnion union_orbit(const System& system, const FiniteSet& a, std::uint64_t horizon);

// lcm of the periods of the points of A (saturates at UINT64_MAX).
std::uint64_t period_lcm(const System& system, const FiniteSet& a);

}  // namespace hyperlab
