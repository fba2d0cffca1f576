#include "hyperlab/point.hpp"

#include <algorithm>

namespace hyperlab {

CirclePoint::CirclePoint(Rational a, Rational h) : angle(a.frac()), height(h) {
  if (height < Rational(0)) throw std::invalid_argument("CirclePoint: negative height");
}

Point house(std::int64_t n, std::int64_t k) {
  if (n < 1) throw std::invalid_argument("house: level must be >= 1");
  return CirclePoint(Rational(((k % n) + n) % n, n), Rational(1, n));
}

Point circle_point(Rational angle) { return CirclePoint(angle, Rational(0)); }

bool same_space(const Point& p, const Point& q) noexcept {
  if (p.index() != q.index()) return false;
  if (const auto* a = std::get_if<AbstractPoint>(&p)) {
    return a->table == std::get<AbstractPoint>(q).table;
  }
  return true;
}

std::string to_string(const Point& p) {
  if (const auto* c = std::get_if<CirclePoint>(&p)) {
    return "(" + c->angle.str() + ", " + c->height.str() + ")";
  }
  return "#" + std::to_string(std::get<AbstractPoint>(p).index);
}

FiniteSet::FiniteSet(std::vector<Point> points) : points_(std::move(points)) {
  if (points_.empty()) throw std::invalid_argument("FiniteSet: empty set");
  for (const auto& p : points_) {
    if (!same_space(p, points_.front())) throw DomainMismatch("FiniteSet: points from different spaces");
  }
  std::sort(points_.begin(), points_.end());
  points_.erase(std::unique(points_.begin(), points_.end()), points_.end());
}

bool FiniteSet::contains(const Point& p) const {
  return std::binary_search(points_.begin(), points_.end(), p);
}

bool FiniteSet::is_subset_of(const FiniteSet& other) const {
  return std::includes(other.points_.begin(), other.points_.end(), points_.begin(), points_.end());
}

FiniteSet set_union(const FiniteSet& a, const FiniteSet& b) {
  std::vector<Point> out(a.begin(), a.end());
  out.insert(out.end(), b.begin(), b.end());
  return FiniteSet(std::move(out));
}

FiniteSet set_intersection(const FiniteSet& a, const FiniteSet& b) {
  std::vector<Point> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  if (out.empty()) throw std::invalid_argument("set_intersection: empty intersection");
  return FiniteSet(std::move(out));
}

}  // namespace hyperlab
