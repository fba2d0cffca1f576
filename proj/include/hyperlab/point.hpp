#pragma once

#include <cstddef>
#include <memory>
#include <span>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "hyperlab/rational.hpp"

namespace hyperlab {

// Raised whenever two points (or sets) from different ambient spaces meet.
class DomainMismatch : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class DistanceTable;

/// A point (e^{2πi·angle}, height) of C×R, angle in turns.
struct CirclePoint {
  Rational angle;   // reduced, in [0,1)
  Rational height;  // >= 0

  CirclePoint() = default;
  CirclePoint(Rational a, Rational h);

  friend bool operator==(const CirclePoint&, const CirclePoint&) = default;
  friend auto operator<=>(const CirclePoint& a, const CirclePoint& b) {
    if (auto c = a.height <=> b.height; c != 0) return c;
    return a.angle <=> b.angle;
  }
};

/// A vertex of a finite metric space given by a DistanceTable.
struct AbstractPoint {
  std::size_t index = 0;
  std::shared_ptr<const DistanceTable> table;

  friend bool operator==(const AbstractPoint& a, const AbstractPoint& b) noexcept {
    return a.index == b.index && a.table == b.table;
  }
  friend std::strong_ordering operator<=>(const AbstractPoint& a, const AbstractPoint& b) noexcept {
    if (a.table != b.table) {
      return std::less<const DistanceTable*>{}(a.table.get(), b.table.get()) ? std::strong_ordering::less
                                                                            : std::strong_ordering::greater;
    }
    return a.index <=> b.index;
  }
};

using Point = std::variant<CirclePoint, AbstractPoint>;

// u_n^k = (k/n turns, height 1/n)
Point house(std::int64_t n, std::int64_t k);
// (angle, 0) on the fixed circle
Point circle_point(Rational angle);

bool same_space(const Point& p, const Point& q) noexcept;
std::string to_string(const Point& p);

/// Canonical non-empty finite set of points from a single ambient space.
class FiniteSet {
 public:
  explicit FiniteSet(std::vector<Point> points);
  FiniteSet(std::initializer_list<Point> points) : FiniteSet(std::vector<Point>(points)) {}

  std::span<const Point> points() const noexcept { return points_; }
  std::size_t size() const noexcept { return points_.size(); }
  const Point& operator[](std::size_t i) const { return points_[i]; }
  auto begin() const noexcept { return points_.begin(); }
  auto end() const noexcept { return points_.end(); }

  bool contains(const Point& p) const;
  bool is_subset_of(const FiniteSet& other) const;

  friend bool operator==(const FiniteSet&, const FiniteSet&) = default;

 private:
  std::vector<Point> points_;
};

// Set algebra on canonical sets; both throw std::invalid_argument on an empty result.
FiniteSet set_union(const FiniteSet& a, const FiniteSet& b);
FiniteSet set_intersection(const FiniteSet& a, const FiniteSet& b);

}  // namespace hyperlab
