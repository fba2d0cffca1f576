#include "hyperlab/system.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <set>

#include <json.hpp>

namespace hyperlab {

System::System(Parts parts) : parts_(std::make_shared<const Parts>(std::move(parts))) {
  if (!parts_->step || !parts_->period_of || !parts_->contains || !parts_->enumerate) {
    throw std::invalid_argument("System: step, period_of, contains and enumerate are required");
  }
}

Point System::iterate(const Point& p, std::uint64_t m) const {
  if (parts_->iterate) return parts_->iterate(p, m);
  m %= period_of(p);
  Point q = p;
  for (std::uint64_t i = 0; i < m; ++i) q = step(q);
  return q;
}

FiniteSet System::carrier() const { return FiniteSet(parts_->enumerate()); }

std::vector<std::int64_t> HousesConfig::default_extras() {
  std::vector<std::int64_t> v(64);
  std::iota(v.begin(), v.end(), 1);
  return v;
}

std::vector<std::int64_t> HousesConfig::tower(int depth) {
  if (depth > 5) throw ConfigError("tower depth " + std::to_string(depth) + " exceeds the level cap 2^32");
  std::vector<std::int64_t> v;
  std::int64_t n = 2;
  for (int k = 1; k <= depth; ++k) {
    n = n * n;
    v.push_back(n);
  }
  return v;
}

namespace {

void check_levels(const std::vector<std::int64_t>& levels, const char* what) {
  std::set<std::int64_t> seen;
  for (auto n : levels) {
    if (n < 1) throw ConfigError(std::string(what) + ": level must be >= 1, got " + std::to_string(n));
    if (n > kMaxLevel) {
      throw ConfigError(std::string(what) + ": level " + std::to_string(n) + " exceeds the 2^32 denominator cap");
    }
    if (!seen.insert(n).second) throw ConfigError(std::string(what) + ": duplicate level " + std::to_string(n));
  }
}

// Height 1/n with n >= 1 means the point lives on U_n.
std::int64_t level_of(const CirclePoint& c) {
  if (c.height.is_zero()) return 0;
  if (c.height.num() != 1) throw std::domain_error("rotating_houses: height " + c.height.str() + " is not of the form 1/n");
  return c.height.den();
}

const CirclePoint& as_circle(const Point& p) {
  const auto* c = std::get_if<CirclePoint>(&p);
  if (!c) throw DomainMismatch("rotating_houses: abstract point given to a circle system");
  return *c;
}

}  // namespace

System build_rotating_houses(const HousesConfig& cfg) {
  check_levels(cfg.levels, "levels");
  check_levels(cfg.extra_levels, "extra_levels");
  if (cfg.circle_mesh < 1) throw ConfigError("circle_mesh must be >= 1");
  if (cfg.circle_mesh > kMaxLevel) throw ConfigError("circle_mesh exceeds the 2^32 denominator cap");

  std::set<std::int64_t> all(cfg.levels.begin(), cfg.levels.end());
  all.insert(cfg.extra_levels.begin(), cfg.extra_levels.end());
  auto level_set = std::make_shared<const std::set<std::int64_t>>(std::move(all));
  const std::int64_t mesh = cfg.circle_mesh;

  System::Parts parts;
  parts.step = [](const Point& p) -> Point {
    const auto& c = as_circle(p);
    const auto n = level_of(c);
    if (n == 0) return p;
    return CirclePoint(c.angle + c.height, c.height);
  };
  parts.iterate = [](const Point& p, std::uint64_t m) -> Point {
    const auto& c = as_circle(p);
    const auto n = level_of(c);
    if (n == 0) return p;
    const auto shift = static_cast<std::int64_t>(m % static_cast<std::uint64_t>(n));
    return CirclePoint(c.angle + Rational(shift, n), c.height);
  };
  parts.period_of = [](const Point& p) -> std::uint64_t {
    const auto n = level_of(as_circle(p));
    return n == 0 ? 1 : static_cast<std::uint64_t>(n);
  };
  parts.contains = [level_set, mesh](const Point& p) {
    const auto* c = std::get_if<CirclePoint>(&p);
    if (!c) return false;
    if (c->height.is_zero()) return mesh % c->angle.den() == 0;
    if (c->height.num() != 1) return false;
    const auto n = c->height.den();
    return level_set->count(n) > 0 && n % c->angle.den() == 0;
  };
  parts.enumerate = [level_set, mesh] {
    std::vector<Point> pts;
    for (auto n : *level_set)
      for (std::int64_t k = 0; k < n; ++k) pts.push_back(house(n, k));
    for (std::int64_t j = 0; j < mesh; ++j) pts.push_back(circle_point(Rational(j, mesh)));
    return pts;
  };
  parts.descriptor = "rotating_houses(levels=" + std::to_string(cfg.levels.size()) +
                     ", extras=" + std::to_string(cfg.extra_levels.size()) + ", mesh=" + std::to_string(mesh) + ")";
  return System(std::move(parts));
}

System from_permutation(std::size_t n, const std::vector<std::size_t>& images,
                        std::shared_ptr<const DistanceTable> table) {
  if (!table) throw ConfigError("from_permutation: missing distance table");
  if (table->size() != n) {
    throw ConfigError("from_permutation: table has " + std::to_string(table->size()) + " points, expected " +
                      std::to_string(n));
  }
  if (images.size() != n) throw ConfigError("from_permutation: images has wrong length");
  std::vector<bool> hit(n, false);
  for (auto i : images) {
    if (i >= n || hit[i]) throw ConfigError("from_permutation: images is not a permutation of 0..n-1");
    hit[i] = true;
  }
  auto periods = std::make_shared<std::vector<std::uint64_t>>(n, 0);
  for (std::size_t s = 0; s < n; ++s) {
    if ((*periods)[s] != 0) continue;
    std::vector<std::size_t> cycle{s};
    for (auto j = images[s]; j != s; j = images[j]) cycle.push_back(j);
    for (auto j : cycle) (*periods)[j] = cycle.size();
  }
  auto img = std::make_shared<const std::vector<std::size_t>>(images);

  auto index_of = [table](const Point& p) -> std::size_t {
    const auto* a = std::get_if<AbstractPoint>(&p);
    if (!a || a->table != table) throw DomainMismatch("permutation system: point from another space");
    return a->index;
  };

  System::Parts parts;
  parts.step = [img, table, index_of](const Point& p) -> Point {
    return AbstractPoint{(*img)[index_of(p)], table};
  };
  parts.period_of = [periods, index_of](const Point& p) { return (*periods)[index_of(p)]; };
  parts.contains = [table](const Point& p) {
    const auto* a = std::get_if<AbstractPoint>(&p);
    return a && a->table == table && a->index < table->size();
  };
  parts.enumerate = [table] {
    std::vector<Point> pts;
    for (std::size_t i = 0; i < table->size(); ++i) pts.push_back(AbstractPoint{i, table});
    return pts;
  };
  parts.descriptor = "permutation(n=" + std::to_string(n) + ")";
  return System(std::move(parts));
}

System load_permutation_json(const std::filesystem::path& path) {
  std::ifstream f(path);
  if (!f) throw ConfigError("cannot open permutation file " + path.string());
  nlohmann::json j;
  try {
    f >> j;
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError("permutation file " + path.string() + ": " + e.what());
  }
  if (!j.contains("n")) throw ConfigError("permutation file: missing field 'n'");
  if (!j.contains("images")) throw ConfigError("permutation file: missing field 'images'");
  const auto n = j.at("n").get<std::size_t>();
  const auto images = j.at("images").get<std::vector<std::size_t>>();
  std::shared_ptr<const DistanceTable> table;
  if (j.contains("metric") && !j.at("metric").is_null()) {
    table = load_distance_table_csv(path.parent_path() / j.at("metric").get<std::string>());
  } else {
    table = DistanceTable::discrete(n);
  }
  return from_permutation(n, images, std::move(table));
}

AbstractPoint vertex(const System& permutation_system, std::size_t index) {
  const auto carrier = permutation_system.carrier();
  if (index >= carrier.size()) throw std::out_of_range("vertex: index outside the carrier");
  const auto& p = std::get<AbstractPoint>(carrier[0]);
  return AbstractPoint{index, p.table};
}

ValidationReport validate(const System& system) {
  ValidationReport report;
  const auto carrier = system.carrier();
  report.carrier_size = carrier.size();

  std::vector<Point> images;
  images.reserve(carrier.size());
  for (const auto& p : carrier) {
    auto q = system.step(p);
    if (!carrier.contains(q)) {
      report.violations.push_back("step leaves the carrier at " + to_string(p));
    }
    images.push_back(std::move(q));
  }
  std::sort(images.begin(), images.end());
  if (std::adjacent_find(images.begin(), images.end()) != images.end()) {
    report.violations.push_back("not a bijection: two carrier points share an image");
  }

  // Walk each orbit once and compare its length with the declared periods.
  std::vector<bool> seen(carrier.size(), false);
  auto index = [&](const Point& p) {
    return static_cast<std::size_t>(std::lower_bound(carrier.begin(), carrier.end(), p) - carrier.begin());
  };
  for (std::size_t s = 0; s < carrier.size() && report.violations.size() < 32; ++s) {
    if (seen[s]) continue;
    std::vector<std::size_t> orbit{s};
    seen[s] = true;
    Point q = system.step(carrier[s]);
    bool closed = true;
    while (!(q == carrier[s])) {
      if (!carrier.contains(q)) {
        closed = false;
        break;
      }
      const auto i = index(q);
      if (seen[i]) {
        closed = false;
        break;
      }
      seen[i] = true;
      orbit.push_back(i);
      q = system.step(q);
    }
    if (!closed) {
      report.violations.push_back("orbit of " + to_string(carrier[s]) + " does not return");
      continue;
    }
    for (auto i : orbit) {
      const auto declared = system.period_of(carrier[i]);
      if (declared != orbit.size()) {
        report.violations.push_back("period_of(" + to_string(carrier[i]) + ") = " + std::to_string(declared) +
                                    " but the orbit has length " + std::to_string(orbit.size()));
        break;
      }
    }
    report.period_histogram[orbit.size()] += orbit.size();
  }
  report.ok = report.violations.empty();
  return report;
}

}  // namespace hyperlab
