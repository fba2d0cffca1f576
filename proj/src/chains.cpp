#include "hyperlab/chains.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "hyperlab/io.hpp"

namespace hyperlab {

bool within(const Point& p, const Point& q, double eps) { return eps <= 0.0 ? p == q : dist(p, q) < eps; }

bool ChainDigraph::has_edge(std::size_t from, std::size_t to) const {
  return std::binary_search(edges[from].begin(), edges[from].end(), to);
}

ChainDigraph build_digraph(const System& system, const FiniteSet& s, double eps) {
  ChainDigraph g{s, eps, Adjacency(s.size())};
  for (std::size_t i = 0; i < s.size(); ++i) {
    const auto image = system.step(s[i]);
    if (eps <= 0.0) {
      const auto it = std::lower_bound(s.begin(), s.end(), image);
      if (it != s.end() && *it == image) g.edges[i].push_back(static_cast<std::size_t>(it - s.begin()));
      continue;
    }
    for (std::size_t j = 0; j < s.size(); ++j)
      if (dist(image, s[j]) < eps) g.edges[i].push_back(j);
  }
  return g;
}

bool is_ict(const ChainDigraph& g) {
  if (g.vertices.size() == 1) return g.has_edge(0, 0);
  return strongly_connected_components(g.edges).count == 1;
}

bool is_ict(const System& system, const FiniteSet& s, double eps) { return is_ict(build_digraph(system, s, eps)); }

bool weak_incompressibility(const System& system, const FiniteSet& s, double eps, std::size_t cap) {
  const std::size_t n = s.size();
  if (n > cap) {
    throw std::length_error("weak_incompressibility: " + std::to_string(n) + " points exceed the brute-force cap of " +
                            std::to_string(cap));
  }
  std::vector<Point> images;
  images.reserve(n);
  for (const auto& p : s) images.push_back(system.step(p));
  if (n == 1) return within(images[0], s[0], eps);

  // hits[j] = bitmask of points of S within eps of f(s_j)
  std::vector<std::uint32_t> hits(n, 0);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < n; ++i)
      if (within(images[j], s[i], eps)) hits[j] |= std::uint32_t{1} << i;

  const std::uint32_t full = (std::uint32_t{1} << n) - 1;
  for (std::uint32_t f = 1; f < full; ++f) {
    bool meets = false;
    for (std::size_t j = 0; j < n && !meets; ++j)
      if (!(f >> j & 1u)) meets = (hits[j] & f) != 0;
    if (!meets) return false;
  }
  return true;
}

CycleDecomposition component_cycle(const System& system, const FiniteSet& s, double eps) {
  if (!is_ict(system, s, eps)) {
    throw std::invalid_argument("component_cycle: set is not internally chain transitive at eps " +
                                std::to_string(eps));
  }
  const std::size_t n = s.size();
  UnionFind uf(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (within(s[i], s[j], eps)) uf.unite(i, j);

  // number components by their smallest member
  std::map<std::size_t, std::size_t> label;
  std::vector<std::size_t> comp(n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto root = uf.find(i);
    const auto it = label.emplace(root, label.size()).first;
    comp[i] = it->second;
  }
  const std::size_t count = label.size();

  CycleDecomposition out;
  out.eps = eps;
  constexpr auto kNone = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> successor(count, kNone);
  for (std::size_t i = 0; i < n; ++i) {
    const auto image = system.step(s[i]);
    std::vector<std::size_t> near;
    for (std::size_t j = 0; j < n; ++j)
      if (within(image, s[j], eps) && std::find(near.begin(), near.end(), comp[j]) == near.end())
        near.push_back(comp[j]);
    if (near.size() != 1) {
      out.violations.push_back("image of " + to_string(s[i]) + " is near " + std::to_string(near.size()) +
                               " components");
      continue;
    }
    auto& succ = successor[comp[i]];
    if (succ == kNone) {
      succ = near.front();
    } else if (succ != near.front()) {
      out.violations.push_back("component image straddles two components at " + to_string(s[i]));
    }
  }

  // walk the successor map from component 0
  std::vector<std::size_t> order;
  std::vector<bool> seen(count, false);
  for (std::size_t c = 0; c != kNone && !seen[c];) {
    seen[c] = true;
    order.push_back(c);
    c = successor[c];
  }
  if (order.size() != count || successor[order.back()] != order.front()) {
    out.violations.push_back("successor map is not a single cycle over " + std::to_string(count) + " components");
  }

  std::vector<std::vector<Point>> members(count);
  for (std::size_t i = 0; i < n; ++i) members[comp[i]].push_back(s[i]);
  if (out.violations.empty()) {
    for (auto c : order) out.components.emplace_back(std::move(members[c]));
    out.period = count;
    for (std::size_t i = 0; i < count; ++i) out.cycle_order.push_back((i + 1) % count);
  } else {
    for (std::size_t c = 0; c < count; ++c) out.components.emplace_back(std::move(members[c]));
    out.period = 0;
    for (std::size_t c = 0; c < count; ++c) out.cycle_order.push_back(successor[c]);
  }
  return out;
}

OrbitLimitReport orbit_limit_check(const System& system, const std::vector<Point>& orbit_points,
                                   const Point& base, const FiniteSet& limit_candidate, double eps,
                                   std::uint64_t horizon) {
  const auto cycle = component_cycle(system, limit_candidate, eps);
  if (!cycle.ok()) throw std::invalid_argument("orbit_limit_check: limit candidate has no clean component cycle");
  const auto holder = std::find_if(cycle.components.begin(), cycle.components.end(),
                                   [&](const FiniteSet& c) { return c.contains(base); });
  if (holder == cycle.components.end()) throw std::invalid_argument("orbit_limit_check: base not in limit candidate");

  OrbitLimitReport out{cycle.period, *holder, {}, {}, std::nullopt, eps};
  for (const auto& x : orbit_points) {
    std::vector<Point> orbit{x};
    Point y = system.iterate(x, out.period);
    bool closed = false;
    for (std::uint64_t j = 1; j <= horizon; ++j) {
      if (y == x) {
        closed = true;
        break;
      }
      orbit.push_back(y);
      y = system.iterate(y, out.period);
    }
    out.distances.push_back(hausdorff(FiniteSet(std::move(orbit)), out.base_component));
    out.complete.push_back(closed);
  }
  for (std::size_t k = out.distances.size(); k-- > 0;) {
    if (!(out.distances[k] < eps)) break;
    out.settled_from = k;
  }
  return out;
}

std::string to_dot(const ChainDigraph& g) {
  std::ostringstream os;
  os << "digraph chain {\n";
  for (std::size_t i = 0; i < g.vertices.size(); ++i)
    os << "  v" << i << " [label=\"" << to_string(g.vertices[i]) << "\"];\n";
  for (std::size_t i = 0; i < g.edges.size(); ++i)
    for (auto j : g.edges[i]) os << "  v" << i << " -> v" << j << ";\n";
  os << "}\n";
  return os.str();
}

std::string to_json(const CycleDecomposition& d) {
  nlohmann::json j;
  j["eps"] = d.eps;
  j["period"] = d.period;
  j["cycle_order"] = d.cycle_order;
  j["components"] = nlohmann::json::array();
  for (const auto& c : d.components) j["components"].push_back(set_to_json(c));
  j["violations"] = d.violations;
  return j.dump(2);
}

}  // namespace hyperlab
