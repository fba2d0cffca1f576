#pragma once

#include <filesystem>
#include <memory>
#include <string>
#include <vector>

#include "hyperlab/point.hpp"

namespace hyperlab {

inline constexpr double kDefaultTolerance = 1e-9;

/// Symmetric distance matrix backing AbstractPoint metrics.
class DistanceTable {
 public:
  // Validates symmetry, zero diagonal, positivity off the diagonal and the
  // triangle inequality (all within `tolerance`). Throws std::invalid_argument.
  DistanceTable(std::size_t size, std::vector<double> entries, std::vector<std::string> ids = {},
                double tolerance = kDefaultTolerance);

  static std::shared_ptr<const DistanceTable> make(std::size_t size, std::vector<double> entries,
                                                   std::vector<std::string> ids = {});
  // Every off-diagonal distance equal to 1.
  static std::shared_ptr<const DistanceTable> discrete(std::size_t size);

  std::size_t size() const noexcept { return size_; }
  double operator()(std::size_t i, std::size_t j) const { return entries_[i * size_ + j]; }
  const std::vector<std::string>& ids() const noexcept { return ids_; }

 private:
  std::size_t size_;
  std::vector<double> entries_;
  std::vector<std::string> ids_;
};

// CSV: header row of ids, then one row per id. A leading id column in body
// rows is accepted when it matches the header.
std::shared_ptr<const DistanceTable> load_distance_table_csv(const std::filesystem::path& path);
std::shared_ptr<const DistanceTable> parse_distance_table_csv(const std::string& text);

// Ambient metric. Circle points use the chord of the unit circle combined
// with the height gap: sqrt((2 sin(π|Δangle|))² + Δheight²).
double dist(const Point& p, const Point& q);

// inf over pairs
double set_dist(const FiniteSet& a, const FiniteSet& b);
// d(p, B)
double point_set_dist(const Point& p, const FiniteSet& b);
// sup_{x∈A} d(x, B)
double directed_hausdorff(const FiniteSet& a, const FiniteSet& b);
double hausdorff(const FiniteSet& a, const FiniteSet& b);

// Points of A strictly within eps of center; may be empty.
std::vector<Point> ball_members(const FiniteSet& a, const Point& center, double eps);

}  // namespace hyperlab
