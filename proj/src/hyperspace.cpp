#include "hyperlab/hyperspace.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <optional>
#include <set>
#include <stdexcept>

namespace hyperlab {

std::vector<std::uint64_t> ReturnStats::returns_at(double eps) const {
  std::vector<std::uint64_t> out;
  for (std::size_t i = 0; i < series.size(); ++i)
    if (series[i] < eps) out.push_back(i + 1);
  return out;
}

namespace {

void require_in_carrier(const System& system, const FiniteSet& a) {
  for (const auto& p : a)
    if (!system.contains(p)) throw std::domain_error("point " + to_string(p) + " is outside the carrier");
}

}  // namespace

FiniteSet induced_step(const System& system, const FiniteSet& a) {
  require_in_carrier(system, a);
  std::vector<Point> image;
  image.reserve(a.size());
  for (const auto& p : a) image.push_back(system.step(p));
  return FiniteSet(std::move(image));
}

FiniteSet induced_iterate(const System& system, const FiniteSet& a, std::uint64_t m) {
  require_in_carrier(system, a);
  std::vector<Point> image;
  image.reserve(a.size());
  for (const auto& p : a) image.push_back(system.iterate(p, m));
  return FiniteSet(std::move(image));
}

ReturnStats orbit_series(const System& system, const FiniteSet& a, std::uint64_t horizon) {
  if (horizon < 1) throw std::invalid_argument("orbit_series: horizon must be >= 1");
  ReturnStats stats;
  stats.horizon = horizon;
  stats.series.reserve(horizon);
  FiniteSet current = a;
  for (std::uint64_t n = 1; n <= horizon; ++n) {
    current = induced_step(system, current);
    stats.series.push_back(hausdorff(current, a));
  }
  return stats;
}

SetIndex::SetIndex(std::vector<FiniteSet> pivots) : pivots_(std::move(pivots)) {
  if (pivots_.empty()) throw std::invalid_argument("SetIndex: at least one pivot required");
}

std::size_t SetIndex::insert(FiniteSet s) {
  std::vector<double> d;
  d.reserve(pivots_.size());
  for (const auto& p : pivots_) d.push_back(hausdorff(s, p));
  const auto id = sets_.size();
  by_first_.emplace(d.front(), id);
  to_pivot_.push_back(std::move(d));
  sets_.push_back(std::move(s));
  return id;
}

template <class Visit>
void SetIndex::scan(const FiniteSet& x, double eps, Visit&& visit) const {
  // slack keeps pruning sound under rounding of the pivot distances
  const double reach = eps + 1e-12;
  std::vector<double> d;
  d.reserve(pivots_.size());
  for (const auto& p : pivots_) d.push_back(hausdorff(x, p));
  const auto lo = by_first_.lower_bound(d.front() - reach);
  const auto hi = by_first_.upper_bound(d.front() + reach);
  for (auto it = lo; it != hi; ++it) {
    const auto& t = to_pivot_[it->second];
    bool pruned = false;
    for (std::size_t k = 1; k < d.size() && !pruned; ++k) pruned = std::abs(d[k] - t[k]) > reach;
    if (pruned || !(hausdorff(x, sets_[it->second]) < eps)) continue;
    if (!visit(it->second)) return;
  }
}

std::vector<std::size_t> SetIndex::within(const FiniteSet& x, double eps) const {
  std::vector<std::size_t> out;
  scan(x, eps, [&](std::size_t i) {
    out.push_back(i);
    return true;
  });
  std::sort(out.begin(), out.end());
  return out;
}

bool SetIndex::any_within(const FiniteSet& x, double eps) const {
  bool found = false;
  scan(x, eps, [&](std::size_t) {
    found = true;
    return false;
  });
  return found;
}

std::vector<FiniteSet> orbit_pivots(const System& system, const FiniteSet& a, std::uint64_t horizon,
                                    std::size_t count) {
  std::vector<FiniteSet> out;
  for (std::size_t j = 0; j < count; ++j) out.push_back(induced_iterate(system, a, horizon / count * j));
  return out;
}

SetFamily omega_sample(const System& system, const FiniteSet& a, std::uint64_t burn_in, std::uint64_t horizon,
                       double eps) {
  if (burn_in >= horizon) throw std::invalid_argument("omega_sample: burn_in must be < horizon");
  SetFamily family;
  family.tolerance = eps;
  auto by_points = [](const FiniteSet& x, const FiniteSet& y) {
    return std::lexicographical_compare(x.begin(), x.end(), y.begin(), y.end());
  };
  std::set<FiniteSet, decltype(by_points)> exact(by_points);
  FiniteSet current = induced_iterate(system, a, burn_in);
  std::optional<SetIndex> index;
  if (eps > 0.0) index.emplace(orbit_pivots(system, current, horizon - burn_in));
  for (std::uint64_t n = burn_in; n <= horizon; ++n) {
    bool fresh = !exact.contains(current);
    // eps <= 0 is exact mode: only identical sets merge
    if (fresh && index) fresh = !index->any_within(current, eps);
    if (fresh) {
      exact.insert(current);
      if (index) index->insert(current);
      family.members.push_back(current);
      family.times.push_back(n);
    }
    if (n < horizon) current = induced_step(system, current);
  }
  return family;
}

std::uint64_t period_lcm(const System& system, const FiniteSet& a) {
  std::uint64_t l = 1;
  for (const auto& p : a) {
    const auto q = system.period_of(p);
    const auto g = std::gcd(l, q);
    if (l / g > std::numeric_limits<std::uint64_t>::max() / q) return std::numeric_limits<std::uint64_t>::max();
    l = l / g * q;
  }
  return l;
}

OrbitUnion union_orbit(const System& system, const FiniteSet& a, std::uint64_t horizon) {
  if (horizon < 1) throw std::invalid_argument("union_orbit: horizon must be >= 1");
  require_in_carrier(system, a);
  std::vector<Point> pts;
  for (const auto& p : a) {
    // the orbit of p repeats after period_of(p) steps
    const auto reach = std::min<std::uint64_t>(horizon, system.period_of(p));
    Point q = p;
    for (std::uint64_t n = 0; n < reach; ++n) {
      pts.push_back(q);
      q = system.step(q);
    }
  }
  OrbitUnion u{FiniteSet(std::move(pts)), true, period_lcm(system, a)};
  u.complete = horizon >= u.required_horizon;
  return u;
}

}  // namespace hyperlab
