#include "hyperlab/metric.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace hyperlab {

DistanceTable::DistanceTable(std::size_t size, std::vector<double> entries, std::vector<std::string> ids,
                             double tolerance)
    : size_(size), entries_(std::move(entries)), ids_(std::move(ids)) {
  if (size_ == 0) throw std::invalid_argument("DistanceTable: empty table");
  if (entries_.size() != size_ * size_) throw std::invalid_argument("DistanceTable: entry count is not size^2");
  if (ids_.empty()) {
    for (std::size_t i = 0; i < size_; ++i) ids_.push_back(std::to_string(i));
  }
  if (ids_.size() != size_) throw std::invalid_argument("DistanceTable: id count does not match size");
  auto at = [&](std::size_t i, std::size_t j) { return entries_[i * size_ + j]; };
  for (std::size_t i = 0; i < size_; ++i) {
    if (at(i, i) != 0.0) throw std::invalid_argument("DistanceTable: non-zero diagonal at " + ids_[i]);
    for (std::size_t j = 0; j < size_; ++j) {
      if (!std::isfinite(at(i, j))) throw std::invalid_argument("DistanceTable: non-finite entry");
      if (std::abs(at(i, j) - at(j, i)) > tolerance) {
        throw std::invalid_argument("DistanceTable: asymmetric entry (" + ids_[i] + ", " + ids_[j] + ")");
      }
      if (i != j && at(i, j) <= 0.0) {
        throw std::invalid_argument("DistanceTable: non-positive distance between " + ids_[i] + " and " + ids_[j]);
      }
    }
  }
  for (std::size_t i = 0; i < size_; ++i)
    for (std::size_t j = 0; j < size_; ++j)
      for (std::size_t k = 0; k < size_; ++k)
        if (at(i, k) > at(i, j) + at(j, k) + tolerance) {
          throw std::invalid_argument("DistanceTable: triangle inequality fails for (" + ids_[i] + ", " + ids_[j] +
                                      ", " + ids_[k] + ")");
        }
}

std::shared_ptr<const DistanceTable> DistanceTable::make(std::size_t size, std::vector<double> entries,
                                                         std::vector<std::string> ids) {
  return std::make_shared<const DistanceTable>(size, std::move(entries), std::move(ids));
}

std::shared_ptr<const DistanceTable> DistanceTable::discrete(std::size_t size) {
  std::vector<double> e(size * size, 1.0);
  for (std::size_t i = 0; i < size; ++i) e[i * size + i] = 0.0;
  return make(size, std::move(e));
}

namespace {

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> out;
  std::stringstream ss(line);
  std::string cell;
  while (std::getline(ss, cell, ',')) {
    const auto b = cell.find_first_not_of(" \t\r");
    const auto e = cell.find_last_not_of(" \t\r");
    out.push_back(b == std::string::npos ? std::string{} : cell.substr(b, e - b + 1));
  }
  return out;
}

}  // namespace

std::shared_ptr<const DistanceTable> parse_distance_table_csv(const std::string& text) {
  std::stringstream in(text);
  std::string line;
  std::vector<std::vector<std::string>> rows;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    rows.push_back(split_csv_line(line));
  }
  if (rows.empty()) throw std::invalid_argument("distance CSV: no header row");
  auto header = rows.front();
  // a blank top-left cell marks a leading id column
  const bool corner = !header.empty() && header.front().empty();
  if (corner) header.erase(header.begin());
  const std::size_t n = header.size();
  if (rows.size() - 1 != n) {
    throw std::invalid_argument("distance CSV: expected " + std::to_string(n) + " body rows, found " +
                                std::to_string(rows.size() - 1));
  }
  std::vector<double> entries;
  entries.reserve(n * n);
  for (std::size_t r = 1; r < rows.size(); ++r) {
    auto cells = rows[r];
    if (cells.size() == n + 1) {
      if (cells.front() != header[r - 1]) {
        throw std::invalid_argument("distance CSV: row id '" + cells.front() + "' does not match header '" +
                                    header[r - 1] + "'");
      }
      cells.erase(cells.begin());
    }
    if (cells.size() != n) {
      throw std::invalid_argument("distance CSV: row " + std::to_string(r) + " has " +
                                  std::to_string(cells.size()) + " fields, expected " + std::to_string(n));
    }
    for (const auto& c : cells) {
      try {
        std::size_t used = 0;
        entries.push_back(std::stod(c, &used));
        if (used != c.size()) throw std::invalid_argument(c);
      } catch (const std::exception&) {
        throw std::invalid_argument("distance CSV: not a number: '" + c + "'");
      }
    }
  }
  return DistanceTable::make(n, std::move(entries), std::move(header));
}

std::shared_ptr<const DistanceTable> load_distance_table_csv(const std::filesystem::path& path) {
  std::ifstream f(path);
  if (!f) throw std::invalid_argument("cannot open distance table " + path.string());
  std::stringstream ss;
  ss << f.rdbuf();
  return parse_distance_table_csv(ss.str());
}

double dist(const Point& p, const Point& q) {
  if (p.index() != q.index()) throw DomainMismatch("dist: circle point against abstract point");
  if (const auto* a = std::get_if<CirclePoint>(&p)) {
    const auto& b = std::get<CirclePoint>(q);
    if (*a == b) return 0.0;
    const double chord = 2.0 * std::sin(std::numbers::pi * circular_gap(a->angle, b.angle));
    const double dh = abs_difference(a->height, b.height);
    return std::hypot(chord, dh);
  }
  const auto& a = std::get<AbstractPoint>(p);
  const auto& b = std::get<AbstractPoint>(q);
  if (a.table != b.table || !a.table) throw DomainMismatch("dist: abstract points over different tables");
  return (*a.table)(a.index, b.index);
}

double set_dist(const FiniteSet& a, const FiniteSet& b) {
  double best = std::numeric_limits<double>::infinity();
  for (const auto& x : a)
    for (const auto& y : b) best = std::min(best, dist(x, y));
  return best;
}

double point_set_dist(const Point& p, const FiniteSet& b) {
  if (b.contains(p)) return 0.0;
  double best = std::numeric_limits<double>::infinity();
  for (const auto& y : b) best = std::min(best, dist(p, y));
  return best;
}

namespace {

// sup_x inf_y with the early-break rule: once some y is closer than the
// running sup, x cannot raise it.
double directed_from(double floor, const FiniteSet& a, const FiniteSet& b) {
  double sup = floor;
  for (const auto& x : a) {
    if (b.contains(x)) continue;
    double inf = std::numeric_limits<double>::infinity();
    for (const auto& y : b) {
      inf = std::min(inf, dist(x, y));
      if (inf <= sup) break;
    }
    sup = std::max(sup, inf);
  }
  return sup;
}

}  // namespace

double directed_hausdorff(const FiniteSet& a, const FiniteSet& b) {
  if (!same_space(a[0], b[0])) throw DomainMismatch("hausdorff: sets from different spaces");
  return directed_from(0.0, a, b);
}

double hausdorff(const FiniteSet& a, const FiniteSet& b) {
  if (!same_space(a[0], b[0])) throw DomainMismatch("hausdorff: sets from different spaces");
  if (&a == &b) return 0.0;
  return directed_from(directed_from(0.0, a, b), b, a);
}

std::vector<Point> ball_members(const FiniteSet& a, const Point& center, double eps) {
  if (!(eps > 0.0)) throw std::invalid_argument("ball_members: eps must be positive");
  std::vector<Point> out;
  for (const auto& p : a)
    if (dist(p, center) < eps) out.push_back(p);
  return out;
}

}  // namespace hyperlab
