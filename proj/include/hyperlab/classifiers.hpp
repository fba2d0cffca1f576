#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hyperlab/hyperspace.hpp"

namespace hyperlab {

// Every certificate and verdict below is a claim at scale (eps, horizon);
// none of them asserts an infinite-horizon property.

struct RecurrenceResult {
  double eps = 0;
  std::uint64_t horizon = 0;
  std::optional<std::uint64_t> first_return;  // smallest n with d_H(f^n A, A) < eps
  double min_observed = 0;
  std::uint64_t argmin = 0;
};

RecurrenceResult recurrence_certificate(const System& system, const FiniteSet& a, double eps, std::uint64_t horizon);

/// d_H(f^{kN}(A), A) < eps for every 1 <= k <= K.
struct URCertificate {
  double eps = 0;
  std::uint64_t N = 0;
  std::uint64_t K = 0;
  double max_observed = 0;
};

struct URScan {
  std::optional<URCertificate> certificate;
  std::vector<double> worst_per_N;  // worst_per_N[N-1] = max_k d_H(f^{kN} A, A)
};

// First N <= N_max whose progression stays eps-close.
URScan ur_certificate(const System& system, const FiniteSet& a, double eps, std::uint64_t N_max, std::uint64_t K);
// Checks the progression for one fixed N.
URScan ur_verify(const System& system, const FiniteSet& a, double eps, std::uint64_t N, std::uint64_t K);
bool recheck(const System& system, const FiniteSet& a, const URCertificate& cert);

/// Every window of gap_bound consecutive times in [0, horizon] holds an eps-return.
struct APCertificate {
  double eps = 0;
  std::uint64_t gap_bound = 0;
  std::uint64_t horizon = 0;
};

struct APScan {
  std::optional<APCertificate> certificate;
  std::uint64_t largest_gap = 0;  // smallest admissible gap bound for this horizon
};

APScan ap_certificate(const System& system, const FiniteSet& a, double eps, std::uint64_t gap_max,
                      std::uint64_t horizon);
bool recheck(const System& system, const FiniteSet& a, const APCertificate& cert);
// A progression certificate (eps, N, K) gives syndetic returns with gap N over [0, N·K].
APCertificate ap_from_ur(const URCertificate& cert);
// Longest run of non-returns in [0, horizon] plus one; n = 0 always returns.
std::uint64_t return_gap(const ReturnStats& stats, double eps);

struct PairVerdict {
  double liminf_proxy = 0;
  double limsup_proxy = 0;
  bool proximal_at_scale = false;
  bool asymptotic_at_scale = false;
  bool li_yorke_at_scale = false;
  bool separated_at_scale = false;  // limsup_proxy >= delta_dist
  std::uint64_t horizon = 0;
  std::uint64_t tail_start = 0;
  double eps_prox = 0;
  double delta_dist = 0;
};

PairVerdict pair_classify(const System& system, const FiniteSet& a, const FiniteSet& b, std::uint64_t horizon,
                          double tail_fraction, double eps_prox, double delta_dist);

// First time of the tail window [tail_start(h, f), h].
std::uint64_t tail_start(std::uint64_t horizon, double tail_fraction);

struct ExpansionRow {
  double delta = 0;
  double modulus = 0;  // E(delta); 0 when no pair is closer than delta
  std::size_t pairs = 0;
  std::optional<std::pair<Point, Point>> witness;
  std::uint64_t witness_time = 0;
};

// E(δ) = max over carrier pairs with dist < δ of max_{n<=horizon} dist(f^n p, f^n q).
// O(|carrier|^2); meant for small truncations.
std::vector<ExpansionRow> equicontinuity_profile(const System& system, const std::vector<double>& scales,
                                                 std::uint64_t horizon);

struct ScrambleParams {
  std::size_t count = 0;         // family size; 0 means every accepted anchor
  double eps = 0.05;             // recurrence scale and anchor-return scale
  std::uint64_t horizon = 65536;
  double tail_fraction = 0.25;
  double eps_prox = 0.05;
  double delta_dist = 0.1;
  unsigned jobs = 1;
};

struct ScrambledFamily {
  SetFamily family;  // members A_z = base ∪ {z}
  std::vector<Point> anchors;
  std::vector<std::pair<Point, std::string>> rejected;
  std::vector<bool> recurrent;     // per member, at (eps, horizon)
  std::vector<bool> star_holds;    // anchor-return relation at every eps-return time of the base
  std::vector<std::pair<std::size_t, std::size_t>> pair_index;
  std::vector<PairVerdict> verdicts;  // aligned with pair_index, i < j
  std::size_t base_returns = 0;

  bool all_li_yorke() const;
};

ScrambledFamily scrambled_family(const System& system, const FiniteSet& base, const std::vector<Point>& anchors,
                                 const ScrambleParams& params);

struct MinimalReport {
  std::vector<std::vector<std::size_t>> minimal;  // terminal classes of the eps-transition digraph
  std::vector<std::vector<std::size_t>> distinct;  // after merging classes that coincide up to eps
  std::vector<std::size_t> escaping;              // members whose image is eps-far from the family
  bool unique = false;
};

MinimalReport minimal_unique_check(const SetFamily& family, const System& system, double eps);

// Progression scan on the exact intersection A ∩ B. Throws if A ∩ B is empty.
URScan intersect_ur(const System& system, const FiniteSet& a, const FiniteSet& b, double eps, std::uint64_t N_max,
                    std::uint64_t K);

}  // namespace hyperlab
