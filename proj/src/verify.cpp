#include "hyperlab/verify.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <set>

#include "hyperlab/chains.hpp"
#include "hyperlab/classifiers.hpp"
#include "hyperlab/entropy.hpp"
#include "hyperlab/io.hpp"
#include "hyperlab/odometer.hpp"
#include "hyperlab/sets.hpp"

namespace hyperlab {

using nlohmann::json;

namespace {

std::string fmt(double x) { return format_double(x); }

CheckResult make(std::string id, std::string claim) {
  CheckResult r;
  r.id = std::move(id);
  r.claim = std::move(claim);
  return r;
}

}  // namespace

std::vector<FiniteSet> all_subsets(const System& system) {
  const auto carrier = system.carrier();
  const auto n = carrier.size();
  if (n > 16) throw std::length_error("all_subsets: carrier has more than 16 points");
  std::vector<FiniteSet> out;
  for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << n); ++mask) {
    std::vector<Point> pts;
    for (std::size_t i = 0; i < n; ++i)
      if (mask >> i & 1u) pts.push_back(carrier[i]);
    out.emplace_back(std::move(pts));
  }
  return out;
}

CheckResult check_hausdorff_axioms(std::uint64_t seed, std::size_t trials, double slack) {
  auto r = make("hausdorff-axioms", "Hausdorff distance is a metric on finite subsets of the rotating-houses space");
  HousesConfig cfg;
  const auto system = build_rotating_houses(cfg);
  std::mt19937_64 rng(seed);
  std::vector<std::int64_t> levels = cfg.levels;
  levels.insert(levels.end(), cfg.extra_levels.begin(), cfg.extra_levels.end());
  levels.push_back(0);  // the circle
  std::uniform_int_distribution<std::size_t> pick_level(0, levels.size() - 1);
  std::uniform_int_distribution<std::size_t> pick_size(1, 6);
  auto random_point = [&]() -> Point {
    const auto n = levels[pick_level(rng)];
    if (n == 0) return circle_point(Rational(static_cast<std::int64_t>(rng() % cfg.circle_mesh), cfg.circle_mesh));
    return house(n, static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(n)));
  };
  auto random_set = [&] {
    std::vector<Point> pts;
    const auto k = pick_size(rng);
    for (std::size_t i = 0; i < k; ++i) pts.push_back(random_point());
    return FiniteSet(std::move(pts));
  };

  std::size_t failures = 0;
  double worst_triangle = -std::numeric_limits<double>::infinity();
  for (std::size_t t = 0; t < trials; ++t) {
    const auto a = random_set(), b = random_set(), c = random_set();
    for (const auto* s : {&a, &b, &c})
      for (const auto& p : *s)
        if (!system.contains(p)) ++failures;
    const double ab = hausdorff(a, b), ba = hausdorff(b, a), bc = hausdorff(b, c), ac = hausdorff(a, c);
    if (hausdorff(a, a) != 0.0) ++failures;
    if ((ab == 0.0) != (a == b)) ++failures;
    if (std::abs(ab - ba) > slack) ++failures;
    worst_triangle = std::max(worst_triangle, ac - (ab + bc));
    if (ac > ab + bc + slack) ++failures;
  }
  r.passed = failures == 0;
  r.data = {{"trials", trials}, {"failures", failures}, {"worst_triangle_excess", worst_triangle}, {"slack", slack}};
  r.detail = std::to_string(trials) + " triples, " + std::to_string(failures) + " failures";
  return r;
}

CheckResult check_tower_recurrence() {
  auto r = make("tower-set-recurrence",
                "the tower set C returns ever closer at tower times 4, 16, 256");
  HousesConfig cfg;
  const auto system = build_rotating_houses(cfg);
  const auto c = set_C(system, cfg, 4);
  std::vector<double> values;
  for (std::uint64_t t : {4u, 16u, 256u}) values.push_back(hausdorff(induced_iterate(system, c, t), c));
  const auto rec = recurrence_certificate(system, c, 0.1, 65536);
  r.passed = values[0] > values[1] && values[1] > values[2];
  r.data = {{"returns", {{"4", values[0]}, {"16", values[1]}, {"256", values[2]}}},
            {"first_return_eps_0.1", rec.first_return ? json(*rec.first_return) : json(nullptr)}};
  r.detail = "d_H at 4, 16, 256: " + fmt(values[0]) + ", " + fmt(values[1]) + ", " + fmt(values[2]);
  return r;
}

CheckResult check_level_set_escapes() {
  auto r = make("level-set-not-recurrent", "the level set D (n <= 32) stays >= 1.9 away over 16 steps");
  HousesConfig cfg;
  const auto system = build_rotating_houses(cfg);
  const auto d = set_D(system, cfg, 32);
  const auto stats = orbit_series(system, d, 16);
  const double lo = *std::min_element(stats.series.begin(), stats.series.end());
  r.passed = lo >= 1.9;
  r.data = {{"min_return", lo}, {"horizon", 16}, {"threshold", 1.9}};
  r.detail = "min over 1..16 of d_H = " + fmt(lo);
  return r;
}

CheckResult check_mesh_set_progression() {
  auto r = make("mesh-set-uniform-recurrence",
                "H (n <= 24, mesh 256) returns within 0.3 along every multiple of 24 up to k = 50");
  HousesConfig cfg;
  const auto system = build_rotating_houses(cfg);
  const auto h = set_H(system, cfg, 24, 256);
  const auto verified = ur_verify(system, h, 0.3, 24, 50);
  const auto scan = ur_certificate(system, h, 0.3, 24, 50);
  const bool divides = scan.certificate && 24 % scan.certificate->N == 0;
  r.passed = verified.certificate.has_value() && divides && recheck(system, h, *verified.certificate);
  r.data = {{"worst_N24", verified.worst_per_N.front()},
            {"first_N", scan.certificate ? json(scan.certificate->N) : json(nullptr)}};
  r.detail = "max_k d_H(F^{24k} H, H) = " + fmt(verified.worst_per_N.front()) + "; smallest certified N = " +
             (scan.certificate ? std::to_string(scan.certificate->N) : std::string("none"));
  return r;
}

CheckResult check_tower_not_syndetic() {
  auto r = make("tower-set-not-uniformly-recurrent",
                "C has no progression certificate at eps 0.2 (N, k <= 64) and its return gaps grow");
  HousesConfig cfg;
  const auto system = build_rotating_houses(cfg);
  const auto c = set_C(system, cfg, 4);
  const auto scan = ur_certificate(system, c, 0.2, 64, 64);
  const double best = *std::min_element(scan.worst_per_N.begin(), scan.worst_per_N.end());
  const auto stats = orbit_series(system, c, 32768);
  json gaps = json::object();
  std::vector<std::uint64_t> g;
  for (std::uint64_t h : {4096u, 8192u, 16384u, 32768u}) {
    ReturnStats prefix{h, std::vector<double>(stats.series.begin(), stats.series.begin() + h)};
    g.push_back(return_gap(prefix, 0.2));
    gaps[std::to_string(h)] = g.back();
  }
  const bool growing = std::adjacent_find(g.begin(), g.end(), std::greater_equal<>()) == g.end();
  r.passed = !scan.certificate && growing;
  r.data = {{"best_worst_value", best}, {"gaps", gaps}};
  r.detail = std::string(scan.certificate ? "certificate found" : "no certificate") + ", best worst value " +
             fmt(best) + ", gaps " + gaps.dump();
  return r;
}

CheckResult check_ict_matches_incompressibility(const std::vector<NamedSystem>& corpus) {
  auto r = make("ict-equals-weak-incompressibility",
                "internal chain transitivity agrees with weak incompressibility on every subset (exact mode)");
  std::size_t subsets = 0, disagreements = 0, ict = 0;
  for (const auto& [name, system] : corpus) {
    for (const auto& s : all_subsets(system)) {
      ++subsets;
      const bool a = is_ict(system, s, 0.0);
      const bool b = weak_incompressibility(system, s, 0.0);
      ict += a;
      if (a != b) {
        ++disagreements;
        if (r.detail.empty()) r.detail = "first disagreement in " + name + "; ";
      }
    }
  }
  r.passed = disagreements == 0 && corpus.size() >= 20;
  r.data = {{"systems", corpus.size()}, {"subsets", subsets}, {"ict_subsets", ict}, {"disagreements", disagreements}};
  r.detail += std::to_string(corpus.size()) + " systems, " + std::to_string(subsets) + " subsets, " +
              std::to_string(disagreements) + " disagreements";
  return r;
}

CheckResult check_component_cycles(const std::vector<NamedSystem>& corpus) {
  auto r = make("component-cycle", "ICT sets split into components permuted as one cycle whose length divides the lcm");
  std::size_t checked = 0, violations = 0;
  auto inspect = [&](const System& system, const FiniteSet& s, double eps, std::size_t expect) {
    ++checked;
    const auto d = component_cycle(system, s, eps);
    const auto l = period_lcm(system, s);
    std::vector<Point> all;
    for (const auto& c : d.components) all.insert(all.end(), c.begin(), c.end());
    const bool partition = all.size() == s.size() && FiniteSet(all) == s;
    const bool good = d.ok() && partition && d.period >= 1 && l % d.period == 0 && (expect == 0 || d.period == expect);
    if (!good) ++violations;
  };
  for (const auto& [name, system] : corpus)
    for (const auto& s : all_subsets(system))
      if (is_ict(system, s, 0.0)) inspect(system, s, 0.0, 0);

  HousesConfig cfg;
  const auto houses = build_rotating_houses(cfg);
  auto orbit = [](std::int64_t n) {
    std::vector<Point> pts;
    for (std::int64_t k = 0; k < n; ++k) pts.push_back(house(n, k));
    return FiniteSet(std::move(pts));
  };
  inspect(houses, orbit(4), 1.0, 4);
  inspect(houses, orbit(4), 1.5, 1);
  inspect(houses, orbit(16), 0.3, 16);
  inspect(houses, orbit(16), 0.5, 1);
  inspect(houses, orbit(256), 0.02, 256);
  std::vector<Point> mesh;
  for (std::int64_t k = 0; k < 256; ++k) mesh.push_back(circle_point(Rational(k, 256)));
  inspect(houses, FiniteSet(mesh), 0.05, 1);
  inspect(houses, set_union(orbit(4), FiniteSet(mesh)), 0.3, 1);

  r.passed = violations == 0;
  r.data = {{"decompositions", checked}, {"violations", violations}};
  r.detail = std::to_string(checked) + " decompositions, " + std::to_string(violations) + " violations";
  return r;
}

CheckResult check_entropy_zero(std::uint64_t seed) {
  auto r = make("entropy-zero", "spanning counts of the induced map grow subexponentially");
  HousesConfig cfg;
  const auto system = build_rotating_houses(cfg);
  const auto family = random_family(system, 256, 6, seed);
  const auto report = entropy_slope(system, family, 64, 0.05);

  auto constant_counts = [](const System& s) {
    SetFamily f;
    f.members = all_subsets(s);
    f.times.assign(f.members.size(), 0);
    const auto rep = entropy_slope(s, f, 16, 0.5);
    return std::all_of(rep.counts.begin(), rep.counts.end(),
                       [&](const auto& c) { return c.second == f.members.size(); }) &&
           rep.slope == 0.0;
  };
  const bool identity_ok = constant_counts(cycle_type_system({1, 1, 1}));
  const bool permutation_ok = constant_counts(cycle_type_system({4, 2, 1}));
  r.passed = report.entropy_zero_consistent() && identity_ok && permutation_ok;
  r.data = {{"slope", report.slope},
            {"first_count", report.counts.front().second},
            {"last_count", report.counts.back().second},
            {"identity_constant", identity_ok},
            {"permutation_constant", permutation_ok}};
  r.detail = "slope " + fmt(report.slope) + ", counts " + std::to_string(report.counts.front().second) + " -> " +
             std::to_string(report.counts.back().second);
  return r;
}

std::vector<Point> default_scramble_anchors() {
  std::vector<Point> anchors;
  for (std::int64_t i = 0; i < 20; ++i) anchors.push_back(circle_point(Rational(193 + 3 * i, 256)));
  return anchors;
}

CheckResult check_scrambled_family(unsigned jobs) {
  auto r = make("scrambled-family", "members C ∪ {z} for fixed anchors z are pairwise Li-Yorke at scale");
  HousesConfig cfg;
  const auto system = build_rotating_houses(cfg);
  const auto c = set_C(system, cfg, 4);
  ScrambleParams params;
  params.count = 20;
  params.jobs = jobs;
  const auto fam = scrambled_family(system, c, default_scramble_anchors(), params);
  double worst_liminf = 0, smallest_limsup = std::numeric_limits<double>::infinity();
  for (const auto& v : fam.verdicts) {
    worst_liminf = std::max(worst_liminf, v.liminf_proxy);
    smallest_limsup = std::min(smallest_limsup, v.limsup_proxy);
  }
  const bool star = std::all_of(fam.star_holds.begin(), fam.star_holds.end(), [](bool b) { return b; });
  const bool rec = std::all_of(fam.recurrent.begin(), fam.recurrent.end(), [](bool b) { return b; });
  r.passed = fam.anchors.size() == 20 && fam.verdicts.size() == 190 && fam.all_li_yorke() && star && rec;
  r.data = {{"pairs", fam.verdicts.size()},
            {"worst_liminf", worst_liminf},
            {"smallest_limsup", smallest_limsup},
            {"star_holds", star},
            {"recurrent", rec},
            {"base_returns", fam.base_returns}};
  r.detail = std::to_string(fam.verdicts.size()) + " pairs, worst liminf " + fmt(worst_liminf) +
             ", smallest limsup " + fmt(smallest_limsup);
  return r;
}

CheckResult check_asymptotic_containment() {
  auto r = make("asymptotic-containment", "D and H are asymptotic at scale and D ⊆ H in every truncation");
  HousesConfig cfg;
  cfg.levels = {};
  cfg.extra_levels.resize(4096);
  std::iota(cfg.extra_levels.begin(), cfg.extra_levels.end(), 1);
  const auto system = build_rotating_houses(cfg);
  const auto d = set_D(system, cfg, 4096);
  const auto h = set_H(system, cfg, 4096, 256);
  const auto v = pair_classify(system, d, h, 4096, 0.25, 0.05, 0.1);

  bool contained = true;
  for (auto [levels, mesh] : {std::pair<std::int64_t, std::int64_t>{3, 4}, {24, 256}, {32, 256}, {64, 256}, {4096, 256}})
    contained = contained && set_D(system, cfg, levels).is_subset_of(set_H(system, cfg, levels, mesh));
  r.passed = v.asymptotic_at_scale && contained;
  r.data = {{"tail_max", v.limsup_proxy}, {"tail_min", v.liminf_proxy}, {"contained", contained}};
  r.detail = "tail max d_H " + fmt(v.limsup_proxy) + " over [" + std::to_string(v.tail_start) + ", 4096]";
  return r;
}

CheckResult check_odometer_laws() {
  auto r = make("odometer-laws", "adding-machine arithmetic, metric and cylinder structure");
  std::size_t failures = 0;
  for (const auto& bases : std::vector<std::vector<std::uint32_t>>{{2, 2, 2}, {3, 2}}) {
    const auto all = all_addresses(bases);
    const auto zero = OdometerAddress::zero(bases);
    for (const auto& x : all) {
      if (odo_add(x, zero) != x) ++failures;
      for (const auto& y : all) {
        if (odo_add(x, y) != odo_add(y, x)) ++failures;
        for (const auto& z : all)
          if (odo_add(odo_add(x, y), z) != odo_add(x, odo_add(y, z))) ++failures;
      }
    }
  }
  for (const auto& bases : std::vector<std::vector<std::uint32_t>>{{2}, {3}, {2, 2}, {3, 2}, {2, 3, 2}, {2, 2, 2}}) {
    const auto all = all_addresses(bases);
    std::set<OdometerAddress> seen;
    auto x = OdometerAddress::zero(bases);
    do {
      seen.insert(x);
      x = f_alpha(x);
    } while (x != OdometerAddress::zero(bases) && seen.size() <= all.size());
    if (seen.size() != all.size()) ++failures;
    for (const auto& a : all)
      for (const auto& b : all) {
        if ((d_alpha(a, b) == 0.0) != (a == b) || d_alpha(a, b) != d_alpha(b, a)) ++failures;
        for (const auto& c : all)
          if (d_alpha(a, c) > d_alpha(a, b) + d_alpha(b, c)) ++failures;
      }
  }
  bool self_test = true;
  for (const auto& bases : std::vector<std::vector<std::uint32_t>>{{2, 2}, {3, 2}, {2, 2, 2}, {4, 4}}) {
    const auto system = odometer_system(bases);
    const auto start = FiniteSet{Point(vertex(system, 0))};
    const auto n = system.carrier().size();
    const auto sample = omega_sample(system, start, 0, n - 1, 0.0);
    self_test = self_test && signature_match(sample, bases, system, 0.0).verified_cyclic &&
                signature_match(sample, bases, system, 0.1).verified_cyclic;
  }
  r.passed = failures == 0 && self_test;
  r.data = {{"failures", failures}, {"self_test", self_test}};
  r.detail = std::to_string(failures) + " law failures, self-test " + (self_test ? "verified" : "failed");
  return r;
}

CheckResult check_unique_minimal() {
  auto r = make("unique-minimal", "the orbit closure of C has one minimal sub-family with odometer cylinders");
  HousesConfig cfg;
  const auto system = build_rotating_houses(cfg);
  const auto c = set_C(system, cfg, 4);
  const auto sample = omega_sample(system, c, 0, 65536, 0.05);
  const auto report = minimal_unique_check(sample, system, 0.05);
  const auto exact = omega_sample(system, c, 0, 65535, 0.0);
  const auto sig = signature_match(exact, {4, 4, 16}, system, 0.05);
  r.passed = report.unique && report.distinct.size() == 1 && sig.verified_cyclic;
  r.data = {{"sample_size", sample.size()},
            {"minimal_classes", report.minimal.size()},
            {"distinct", report.distinct.size()},
            {"escaping", report.escaping.size()},
            {"verified_cyclic", sig.verified_cyclic}};
  r.detail = std::to_string(report.distinct.size()) + " minimal sub-family over " + std::to_string(sample.size()) +
             " sampled sets; cylinders " + (sig.verified_cyclic ? "cyclic" : "not cyclic");
  return r;
}

std::vector<NamedCheck> theorem_checks(const VerifyOptions& options) {
  const auto seed = options.seed;
  const auto jobs = options.jobs;
  const auto slack = options.tolerance;
  return {
      {"hausdorff-axioms", [=] { return check_hausdorff_axioms(seed, 1000, slack); }},
      {"tower-set-recurrence", [] { return check_tower_recurrence(); }},
      {"level-set-not-recurrent", [] { return check_level_set_escapes(); }},
      {"mesh-set-uniform-recurrence", [] { return check_mesh_set_progression(); }},
      {"tower-set-not-uniformly-recurrent", [] { return check_tower_not_syndetic(); }},
      {"ict-equals-weak-incompressibility", [] { return check_ict_matches_incompressibility(permutation_corpus()); }},
      {"component-cycle", [] { return check_component_cycles(permutation_corpus()); }},
      {"entropy-zero", [=] { return check_entropy_zero(seed); }},
      {"scrambled-family", [=] { return check_scrambled_family(jobs); }},
      {"asymptotic-containment", [] { return check_asymptotic_containment(); }},
      {"odometer-laws", [] { return check_odometer_laws(); }},
      {"unique-minimal", [] { return check_unique_minimal(); }},
  };
}

json to_json(const CheckResult& r) {
  return {{"id", r.id}, {"claim", r.claim}, {"passed", r.passed}, {"detail", r.detail}, {"data", r.data}};
}

}  // namespace hyperlab
