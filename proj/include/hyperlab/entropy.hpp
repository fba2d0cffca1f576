#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "hyperlab/hyperspace.hpp"

namespace hyperlab {

inline constexpr double kEntropyZeroSlope = 0.01;

struct SpanningReport {
  double eps = 0;
  std::vector<std::pair<std::uint64_t, std::size_t>> counts;  // (n, r(n, eps))
  double slope = 0;  // least-squares slope of log r(n) against n

  bool entropy_zero_consistent(double threshold = kEntropyZeroSlope) const { return slope <= threshold; }
};

// D[i][j] = max_{0<=t<n} d_H(f^t A_i, f^t A_j), one matrix per n = 1..n_max.
class DynamicalDistances {
 public:
  DynamicalDistances(const System& system, const std::vector<FiniteSet>& family, std::uint64_t n_max);

  std::uint64_t n_max() const noexcept { return by_n_.size(); }
  std::size_t size() const noexcept { return size_; }
  double operator()(std::uint64_t n, std::size_t i, std::size_t j) const {
    return by_n_[n - 1][i * size_ + j];
  }

 private:
  std::size_t size_;
  std::vector<std::vector<double>> by_n_;
};

// Greedy first-fit: a member joins the first center within eps, else becomes one.
std::size_t greedy_spanning(const DynamicalDistances& d, std::uint64_t n, double eps);

std::size_t spanning_count(const System& system, const SetFamily& family, std::uint64_t n, double eps);
SpanningReport entropy_slope(const System& system, const SetFamily& family, std::uint64_t n_max, double eps);

// Least-squares slope of ys against xs.
double least_squares_slope(const std::vector<double>& xs, const std::vector<double>& ys);

// `count` distinct random subsets of the carrier with 1..max_size points.
SetFamily random_family(const System& system, std::size_t count, std::size_t max_size, std::uint64_t seed);

std::string counts_csv(const SpanningReport& r);
nlohmann::json to_json(const SpanningReport& r);

}  // namespace hyperlab
