#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "hyperlab/metric.hpp"
#include "hyperlab/point.hpp"

namespace hyperlab {

class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A pointwise periodic homeomorphism, truncated to an invariant carrier.
///
/// `step` is total on the ambient space; `contains` tells whether a point is
/// in the carrier. The carrier itself is only materialized on request, since
/// some truncations carry millions of points that no experiment visits.
class System {
 public:
  struct Parts {
    std::function<Point(const Point&)> step;
    std::function<std::uint64_t(const Point&)> period_of;
    std::function<bool(const Point&)> contains;
    std::function<std::vector<Point>()> enumerate;
    // Optional f^m; defaults to m mod period steps.
    std::function<Point(const Point&, std::uint64_t)> iterate;
    std::string descriptor;
  };

  explicit System(Parts parts);

  Point step(const Point& p) const { return parts_->step(p); }
  Point iterate(const Point& p, std::uint64_t m) const;
  std::uint64_t period_of(const Point& p) const { return parts_->period_of(p); }
  bool contains(const Point& p) const { return parts_->contains(p); }
  FiniteSet carrier() const;
  const std::string& descriptor() const noexcept { return parts_->descriptor; }

 private:
  std::shared_ptr<const Parts> parts_;
};

/// Truncation parameters for the rotating-houses space Y: the orbits
/// U_n = {u_n^k} for each configured level plus the pointwise fixed circle.
struct HousesConfig {
  std::vector<std::int64_t> levels{4, 16, 256, 65536};  // 2^{2^k}, k = 1..4
  std::vector<std::int64_t> extra_levels = default_extras();  // the {(1,1/n)} family, carried as full orbits
  std::int64_t circle_mesh = 256;

  static std::vector<std::int64_t> default_extras();
  // levels {4, 16, ..., 2^{2^depth}}
  static std::vector<std::int64_t> tower(int depth);
};

inline constexpr std::int64_t kMaxLevel = std::int64_t{1} << 32;

System build_rotating_houses(const HousesConfig& cfg);

// n vertices, images[i] = f(i), metric from `table` (size n).
System from_permutation(std::size_t n, const std::vector<std::size_t>& images,
                        std::shared_ptr<const DistanceTable> table);

// {"n": 3, "images": [1,2,0], "metric": "table.csv"}; the metric path is
// relative to the JSON file; a missing metric means the discrete metric.
System load_permutation_json(const std::filesystem::path& path);

AbstractPoint vertex(const System& permutation_system, std::size_t index);

struct ValidationReport {
  bool ok = true;
  std::vector<std::string> violations;
  std::map<std::uint64_t, std::size_t> period_histogram;
  std::size_t carrier_size = 0;
};

ValidationReport validate(const System& system);

}  // namespace hyperlab
