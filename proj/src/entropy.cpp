#include "hyperlab/entropy.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

#include "hyperlab/io.hpp"

namespace hyperlab {

DynamicalDistances::DynamicalDistances(const System& system, const std::vector<FiniteSet>& family,
                                       std::uint64_t n_max)
    : size_(family.size()) {
  if (n_max < 1) throw std::invalid_argument("spanning: n must be >= 1");
  std::vector<FiniteSet> current = family;
  std::vector<double> running(size_ * size_, 0.0);
  by_n_.reserve(n_max);
  for (std::uint64_t n = 1; n <= n_max; ++n) {
    for (std::size_t i = 0; i < size_; ++i)
      for (std::size_t j = i + 1; j < size_; ++j) {
        const double d = std::max(running[i * size_ + j], hausdorff(current[i], current[j]));
        running[i * size_ + j] = running[j * size_ + i] = d;
      }
    by_n_.push_back(running);
    if (n < n_max)
      for (auto& s : current) s = induced_step(system, s);
  }
}

std::size_t greedy_spanning(const DynamicalDistances& d, std::uint64_t n, double eps) {
  if (!(eps > 0.0)) throw std::invalid_argument("spanning: eps must be positive");
  std::vector<std::size_t> centers;
  for (std::size_t i = 0; i < d.size(); ++i) {
    const bool covered =
        std::any_of(centers.begin(), centers.end(), [&](std::size_t c) { return d(n, i, c) < eps; });
    if (!covered) centers.push_back(i);
  }
  return centers.size();
}

std::size_t spanning_count(const System& system, const SetFamily& family, std::uint64_t n, double eps) {
  return greedy_spanning(DynamicalDistances(system, family.members, n), n, eps);
}

double least_squares_slope(const std::vector<double>& xs, const std::vector<double>& ys) {
  if (xs.size() != ys.size() || xs.size() < 2) throw std::invalid_argument("least_squares_slope: need >= 2 points");
  const double k = static_cast<double>(xs.size());
  double mx = 0, my = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    mx += xs[i];
    my += ys[i];
  }
  mx /= k;
  my /= k;
  double sxy = 0, sxx = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sxy += (xs[i] - mx) * (ys[i] - my);
    sxx += (xs[i] - mx) * (xs[i] - mx);
  }
  return sxy / sxx;
}

SpanningReport entropy_slope(const System& system, const SetFamily& family, std::uint64_t n_max, double eps) {
  if (n_max < 8) throw std::invalid_argument("entropy_slope: n_max must be >= 8");
  const DynamicalDistances d(system, family.members, n_max);
  SpanningReport r;
  r.eps = eps;
  std::vector<double> xs, ys;
  for (std::uint64_t n = 1; n <= n_max; ++n) {
    const auto count = greedy_spanning(d, n, eps);
    r.counts.emplace_back(n, count);
    xs.push_back(static_cast<double>(n));
    ys.push_back(std::log(static_cast<double>(count)));
  }
  r.slope = least_squares_slope(xs, ys);
  return r;
}

SetFamily random_family(const System& system, std::size_t count, std::size_t max_size, std::uint64_t seed) {
  if (max_size < 1) throw std::invalid_argument("random_family: max_size must be >= 1");
  const auto carrier = system.carrier();
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, carrier.size() - 1);
  std::uniform_int_distribution<std::size_t> size(1, max_size);
  SetFamily out;
  std::set<std::vector<Point>> seen;
  std::size_t attempts = 0;
  while (out.members.size() < count) {
    if (++attempts > 100 * count + 1000) throw std::invalid_argument("random_family: carrier too small for request");
    std::vector<Point> pts;
    const auto k = size(rng);
    for (std::size_t i = 0; i < k; ++i) pts.push_back(carrier[pick(rng)]);
    FiniteSet s(std::move(pts));
    if (!seen.emplace(s.begin(), s.end()).second) continue;
    out.members.push_back(std::move(s));
    out.times.push_back(0);
  }
  return out;
}

std::string counts_csv(const SpanningReport& r) {
  std::string out = "n,count\n";
  for (const auto& [n, c] : r.counts) out += std::to_string(n) + "," + std::to_string(c) + "\n";
  return out;
}

nlohmann::json to_json(const SpanningReport& r) {
  nlohmann::json counts = nlohmann::json::array();
  for (const auto& [n, c] : r.counts) counts.push_back({n, c});
  return {{"eps", r.eps},
          {"slope", r.slope},
          {"entropy_zero_consistent", r.entropy_zero_consistent()},
          {"threshold", kEntropyZeroSlope},
          {"counts", counts}};
}

}  // namespace hyperlab
