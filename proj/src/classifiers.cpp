#include "hyperlab/classifiers.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <thread>

#include "hyperlab/graph.hpp"

namespace hyperlab {

RecurrenceResult recurrence_certificate(const System& system, const FiniteSet& a, double eps, std::uint64_t horizon) {
  if (!(eps > 0.0)) throw std::invalid_argument("recurrence_certificate: eps must be positive");
  RecurrenceResult r;
  r.eps = eps;
  r.horizon = horizon;
  r.min_observed = std::numeric_limits<double>::infinity();
  FiniteSet current = a;
  for (std::uint64_t n = 1; n <= horizon; ++n) {
    current = induced_step(system, current);
    const double d = hausdorff(current, a);
    if (d < r.min_observed) {
      r.min_observed = d;
      r.argmin = n;
    }
    if (d < eps) {
      r.first_return = n;
      break;
    }
  }
  return r;
}

URScan ur_verify(const System& system, const FiniteSet& a, double eps, std::uint64_t N, std::uint64_t K) {
  if (N < 1 || K < 1) throw std::invalid_argument("ur_verify: N and K must be >= 1");
  double worst = 0.0;
  for (std::uint64_t k = 1; k <= K; ++k) worst = std::max(worst, hausdorff(induced_iterate(system, a, k * N), a));
  URScan scan;
  scan.worst_per_N.push_back(worst);
  if (worst < eps) scan.certificate = URCertificate{eps, N, K, worst};
  return scan;
}

URScan ur_certificate(const System& system, const FiniteSet& a, double eps, std::uint64_t N_max, std::uint64_t K) {
  if (N_max < 1 || K < 1) throw std::invalid_argument("ur_certificate: N_max and K must be >= 1");
  const auto stats = orbit_series(system, a, N_max * K);
  URScan scan;
  for (std::uint64_t N = 1; N <= N_max; ++N) {
    double worst = 0.0;
    for (std::uint64_t k = 1; k <= K; ++k) worst = std::max(worst, stats.at(k * N));
    scan.worst_per_N.push_back(worst);
    if (worst < eps) {
      scan.certificate = URCertificate{eps, N, K, worst};
      break;
    }
  }
  return scan;
}

bool recheck(const System& system, const FiniteSet& a, const URCertificate& cert) {
  if (!(cert.max_observed < cert.eps)) return false;
  for (std::uint64_t k = 1; k <= cert.K; ++k)
    if (!(hausdorff(induced_iterate(system, a, k * cert.N), a) < cert.eps)) return false;
  return true;
}

std::uint64_t return_gap(const ReturnStats& stats, double eps) {
  std::uint64_t run = 0, longest = 0;
  for (double d : stats.series) {
    run = d < eps ? 0 : run + 1;
    longest = std::max(longest, run);
  }
  return longest + 1;
}

APScan ap_certificate(const System& system, const FiniteSet& a, double eps, std::uint64_t gap_max,
                      std::uint64_t horizon) {
  if (gap_max >= horizon) throw std::invalid_argument("ap_certificate: gap_max must be < horizon");
  APScan scan;
  scan.largest_gap = return_gap(orbit_series(system, a, horizon), eps);
  if (scan.largest_gap <= gap_max) scan.certificate = APCertificate{eps, scan.largest_gap, horizon};
  return scan;
}

bool recheck(const System& system, const FiniteSet& a, const APCertificate& cert) {
  if (cert.gap_bound < 1) return false;
  // slide every window [s, s+g-1] inside [0, horizon]
  std::vector<bool> hit(cert.horizon + 1, false);
  hit[0] = true;
  FiniteSet current = a;
  for (std::uint64_t n = 1; n <= cert.horizon; ++n) {
    current = induced_step(system, current);
    hit[n] = hausdorff(current, a) < cert.eps;
  }
  for (std::uint64_t s = 0; s + cert.gap_bound <= cert.horizon + 1; ++s) {
    bool any = false;
    for (std::uint64_t t = s; t < s + cert.gap_bound && !any; ++t) any = hit[t];
    if (!any) return false;
  }
  return true;
}

APCertificate ap_from_ur(const URCertificate& cert) { return APCertificate{cert.eps, cert.N, cert.N * cert.K}; }

std::uint64_t tail_start(std::uint64_t horizon, double tail_fraction) {
  if (!(tail_fraction > 0.0) || tail_fraction > 1.0) throw std::invalid_argument("tail_fraction must be in (0, 1]");
  const auto len = std::max<std::uint64_t>(1, static_cast<std::uint64_t>(std::ceil(tail_fraction * horizon)));
  return horizon - std::min(len, horizon) + 1;
}

namespace {

struct Extrema {
  double lo = std::numeric_limits<double>::infinity();
  double hi = 0.0;
};

// Running min/max of d_H(f^n A_i, f^n A_j) over n in [from, to] for all i < j.
std::vector<Extrema> pairwise_extrema(const System& system, const std::vector<FiniteSet>& sets,
                                      std::uint64_t from, std::uint64_t to, unsigned jobs) {
  const std::size_t m = sets.size();
  const std::size_t pairs = m * (m - 1) / 2;
  jobs = std::max(1u, jobs);
  std::vector<std::vector<Extrema>> partial(jobs, std::vector<Extrema>(pairs));
  const std::uint64_t span = to - from + 1;
  auto work = [&](unsigned w) {
    const std::uint64_t lo = from + span * w / jobs;
    const std::uint64_t hi = from + span * (w + 1) / jobs;
    if (lo >= hi) return;
    std::vector<FiniteSet> cur;
    cur.reserve(m);
    for (const auto& s : sets) cur.push_back(induced_iterate(system, s, lo));
    auto& acc = partial[w];
    for (std::uint64_t n = lo; n < hi; ++n) {
      std::size_t p = 0;
      for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j, ++p) {
          const double d = hausdorff(cur[i], cur[j]);
          acc[p].lo = std::min(acc[p].lo, d);
          acc[p].hi = std::max(acc[p].hi, d);
        }
      if (n + 1 < hi)
        for (auto& s : cur) s = induced_step(system, s);
    }
  };
  if (jobs == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < jobs; ++w) pool.emplace_back(work, w);
    for (auto& t : pool) t.join();
  }
  std::vector<Extrema> out(pairs);
  for (const auto& part : partial)
    for (std::size_t p = 0; p < pairs; ++p) {
      out[p].lo = std::min(out[p].lo, part[p].lo);
      out[p].hi = std::max(out[p].hi, part[p].hi);
    }
  return out;
}

PairVerdict verdict_from(const Extrema& e, std::uint64_t horizon, std::uint64_t start, double eps_prox,
                         double delta_dist) {
  PairVerdict v;
  v.liminf_proxy = e.lo;
  v.limsup_proxy = e.hi;
  v.proximal_at_scale = e.lo < eps_prox;
  v.asymptotic_at_scale = e.hi < eps_prox;
  v.li_yorke_at_scale = v.proximal_at_scale && !v.asymptotic_at_scale;
  v.separated_at_scale = e.hi >= delta_dist;
  v.horizon = horizon;
  v.tail_start = start;
  v.eps_prox = eps_prox;
  v.delta_dist = delta_dist;
  return v;
}

}  // namespace

PairVerdict pair_classify(const System& system, const FiniteSet& a, const FiniteSet& b, std::uint64_t horizon,
                          double tail_fraction, double eps_prox, double delta_dist) {
  if (!(eps_prox < delta_dist)) throw std::invalid_argument("pair_classify: eps_prox must be < delta_dist");
  if (horizon < 1) throw std::invalid_argument("pair_classify: horizon must be >= 1");
  const auto start = tail_start(horizon, tail_fraction);
  const auto e = pairwise_extrema(system, {a, b}, start, horizon, 1);
  return verdict_from(e.front(), horizon, start, eps_prox, delta_dist);
}

std::vector<ExpansionRow> equicontinuity_profile(const System& system, const std::vector<double>& scales,
                                                 std::uint64_t horizon) {
  if (scales.empty()) throw std::invalid_argument("equicontinuity_profile: no scales");
  for (std::size_t i = 1; i < scales.size(); ++i)
    if (!(scales[i] < scales[i - 1])) throw std::invalid_argument("equicontinuity_profile: scales must decrease");

  std::vector<ExpansionRow> rows(scales.size());
  for (std::size_t i = 0; i < scales.size(); ++i) rows[i].delta = scales[i];

  const auto carrier = system.carrier();
  const auto pts = carrier.points();
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      const double d0 = dist(pts[i], pts[j]);
      if (!(d0 < scales.front())) continue;
      // both orbits repeat after lcm(periods) steps
      const auto pi = system.period_of(pts[i]);
      const auto pj = system.period_of(pts[j]);
      const auto reach = std::min<std::uint64_t>(horizon, pi / std::gcd(pi, pj) * pj);
      double sep = d0;
      std::uint64_t when = 0;
      Point p = pts[i], q = pts[j];
      for (std::uint64_t n = 1; n <= reach; ++n) {
        p = system.step(p);
        q = system.step(q);
        const double d = dist(p, q);
        if (d > sep) {
          sep = d;
          when = n;
        }
      }
      for (auto& row : rows) {
        if (!(d0 < row.delta)) break;
        ++row.pairs;
        if (sep > row.modulus) {
          row.modulus = sep;
          row.witness = std::make_pair(pts[i], pts[j]);
          row.witness_time = when;
        }
      }
    }
  }
  return rows;
}

bool ScrambledFamily::all_li_yorke() const {
  return std::all_of(verdicts.begin(), verdicts.end(), [](const PairVerdict& v) { return v.li_yorke_at_scale; });
}

ScrambledFamily scrambled_family(const System& system, const FiniteSet& base, const std::vector<Point>& anchors,
                                 const ScrambleParams& params) {
  const auto base_rec = recurrence_certificate(system, base, params.eps, params.horizon);
  if (!base_rec.first_return) {
    throw std::invalid_argument("scrambled_family: base is not recurrent at eps " + std::to_string(params.eps));
  }

  ScrambledFamily out;
  out.family.tolerance = kDefaultTolerance;
  for (const auto& z : anchors) {
    if (params.count != 0 && out.anchors.size() == params.count) break;
    if (!system.contains(z)) {
      out.rejected.emplace_back(z, "outside the carrier");
    } else if (base.contains(z)) {
      out.rejected.emplace_back(z, "inside the base set");
    } else if (!(system.step(z) == z)) {
      out.rejected.emplace_back(z, "not a fixed point");
    } else if (point_set_dist(z, base) < 2.0 * params.eps) {
      out.rejected.emplace_back(z, "closer than 2*eps to the base set");
    } else {
      out.anchors.push_back(z);
      out.family.members.push_back(set_union(base, FiniteSet{z}));
      out.family.times.push_back(0);
    }
  }

  const auto base_series = orbit_series(system, base, params.horizon);
  const auto base_returns = base_series.returns_at(params.eps);
  out.base_returns = base_returns.size();
  for (const auto& member : out.family.members) {
    const auto series = orbit_series(system, member, params.horizon);
    out.recurrent.push_back(!series.returns_at(params.eps).empty());
    bool star = true;
    for (auto n : base_returns) star = star && series.at(n) == base_series.at(n);
    out.star_holds.push_back(star);
  }

  const auto m = out.family.members.size();
  if (m >= 2) {
    const auto start = tail_start(params.horizon, params.tail_fraction);
    const auto ext = pairwise_extrema(system, out.family.members, start, params.horizon, params.jobs);
    std::size_t p = 0;
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = i + 1; j < m; ++j, ++p) {
        out.pair_index.emplace_back(i, j);
        out.verdicts.push_back(verdict_from(ext[p], params.horizon, start, params.eps_prox, params.delta_dist));
      }
  }
  return out;
}

MinimalReport minimal_unique_check(const SetFamily& family, const System& system, double eps) {
  if (family.members.empty()) throw std::invalid_argument("minimal_unique_check: empty family");
  const auto m = family.members.size();
  std::vector<FiniteSet> pivots;
  for (std::size_t k = 0; k < 4; ++k) pivots.push_back(family.members[m / 4 * k]);
  SetIndex index(std::move(pivots));
  for (const auto& s : family.members) index.insert(s);

  Adjacency adj(m);
  MinimalReport report;
  std::vector<bool> escapes(m, false);
  for (std::size_t i = 0; i < m; ++i) {
    adj[i] = index.within(induced_step(system, family.members[i]), eps);
    if (adj[i].empty()) {
      escapes[i] = true;
      report.escaping.push_back(i);
    }
  }
  for (auto& cls : terminal_components(adj)) {
    // an escaping member makes its class non-invariant
    if (std::none_of(cls.begin(), cls.end(), [&](std::size_t v) { return escapes[v]; })) {
      report.minimal.push_back(std::move(cls));
    }
  }

  // x is covered by y when every member of x has an eps-close member in y
  auto covered = [&](const std::vector<std::size_t>& x, const std::vector<std::size_t>& y) {
    return std::all_of(x.begin(), x.end(), [&](std::size_t i) {
      const auto near = index.within(family.members[i], eps);
      return std::any_of(near.begin(), near.end(),
                         [&](std::size_t j) { return std::binary_search(y.begin(), y.end(), j); });
    });
  };
  for (const auto& cls : report.minimal) {
    bool merged = false;
    for (auto& d : report.distinct) {
      if (covered(cls, d) && covered(d, cls)) {
        d.insert(d.end(), cls.begin(), cls.end());
        std::sort(d.begin(), d.end());
        merged = true;
        break;
      }
    }
    if (!merged) report.distinct.push_back(cls);
  }
  report.unique = report.distinct.size() == 1;
  return report;
}

URScan intersect_ur(const System& system, const FiniteSet& a, const FiniteSet& b, double eps, std::uint64_t N_max,
                    std::uint64_t K) {
  return ur_certificate(system, set_intersection(a, b), eps, N_max, K);
}

}  // namespace hyperlab
