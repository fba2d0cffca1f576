#include "experiments.hpp"

#include <cmath>
#include <functional>
#include <map>
#include <sstream>

#include "hyperlab/chains.hpp"
#include "hyperlab/classifiers.hpp"
#include "hyperlab/entropy.hpp"
#include "hyperlab/io.hpp"
#include "hyperlab/odometer.hpp"
#include "hyperlab/verify.hpp"

namespace hyperlab::cli {

using nlohmann::json;

namespace {

struct Context {
  const Scenario& scenario;
  System system;
  FieldReader params;
  std::uint64_t seed;
  double tolerance;
  unsigned jobs;

  FiniteSet set(const std::string& key) {
    return read_set(params.require(key), params.field(key), system, scenario.system);
  }
  std::uint64_t positive(const std::string& key) {
    const auto v = params.count(key);
    if (v == 0) throw ConfigError("field '" + params.field(key) + "' must be >= 1");
    return v;
  }
  std::uint64_t positive(const std::string& key, std::uint64_t fallback) {
    const auto v = params.count(key, fallback);
    if (v == 0) throw ConfigError("field '" + params.field(key) + "' must be >= 1");
    return v;
  }
  double scale(const std::string& key) {
    const auto v = params.number(key);
    if (!(v > 0)) throw ConfigError("field '" + params.field(key) + "' must be > 0");
    return v;
  }
  double scale(const std::string& key, double fallback) {
    const auto v = params.number(key, fallback);
    if (!(v > 0)) throw ConfigError("field '" + params.field(key) + "' must be > 0");
    return v;
  }
};

struct Produced {
  json result = json::object();
  std::map<std::string, std::string> files;  // extra report files by name
  std::vector<std::string> violations;        // built-in theorem-shadow checks
};

std::string csv_banner(const Context& ctx) {
  return "# scenario " + ctx.scenario.hash + " seed " + std::to_string(ctx.seed) + "\n";
}

Produced orbit_series_run(Context& ctx) {
  const auto a = ctx.set("set");
  const auto horizon = ctx.positive("horizon");
  std::vector<double> ladder;
  if (ctx.params.has("eps")) ladder = ctx.params.numbers("eps");
  else ctx.params.optional("eps");
  const auto stats = orbit_series(ctx.system, a, horizon);
  Produced out;
  std::size_t argmin = 0;
  for (std::size_t i = 1; i < stats.series.size(); ++i)
    if (stats.series[i] < stats.series[argmin]) argmin = i;
  json firsts = json::object();
  for (double eps : ladder) {
    auto r = stats.returns_at(eps);
    firsts[format_double(eps)] = r.empty() ? json(nullptr) : json(r.front());
  }
  out.result = {{"set", set_to_json(a)},
                {"horizon", horizon},
                {"min", stats.series[argmin]},
                {"argmin", argmin + 1},
                {"first_return", firsts},
                {"period_lcm", period_lcm(ctx.system, a)}};
  out.files["series.csv"] = csv_banner(ctx) + series_csv(stats);
  return out;
}

Produced classify_pair_run(Context& ctx) {
  const auto a = ctx.set("a");
  const auto b = ctx.set("b");
  const auto horizon = ctx.positive("horizon");
  const auto tail = ctx.params.number("tail_fraction", 0.25);
  const auto eps_prox = ctx.scale("eps_prox");
  const auto delta = ctx.scale("delta_dist");
  Produced out;
  out.result = to_json(pair_classify(ctx.system, a, b, horizon, tail, eps_prox, delta));
  if (ctx.params.has("expansion_scales")) {
    const auto scales = ctx.params.numbers("expansion_scales");
    out.result["expansion"] = to_json(equicontinuity_profile(ctx.system, scales, horizon));
  }
  ctx.params.optional("expansion_scales");
  return out;
}

Produced recurrence_scan_run(Context& ctx) {
  const auto a = ctx.set("set");
  const auto horizon = ctx.positive("horizon");
  Produced out;
  json rows = json::array();
  for (double eps : ctx.params.numbers("eps")) rows.push_back(to_json(recurrence_certificate(ctx.system, a, eps, horizon)));
  out.result = {{"set", set_to_json(a)}, {"scans", rows}};
  return out;
}

Produced ur_scan_run(Context& ctx) {
  const auto a = ctx.set("set");
  const auto eps = ctx.scale("eps");
  const auto K = ctx.positive("K");
  Produced out;
  if (ctx.params.has("N")) {
    const auto N = ctx.positive("N");
    ctx.params.optional("N_max");
    out.result = to_json(ur_verify(ctx.system, a, eps, N, K));
    out.result["mode"] = "verify";
  } else {
    ctx.params.optional("N");
    const auto n_max = ctx.positive("N_max");
    out.result = to_json(ur_certificate(ctx.system, a, eps, n_max, K));
    out.result["mode"] = "scan";
  }
  out.result["certified"] = !out.result["certificate"].is_null();
  return out;
}

Produced ap_scan_run(Context& ctx) {
  const auto a = ctx.set("set");
  const auto eps = ctx.scale("eps");
  const auto gap_max = ctx.positive("gap_max");
  const auto horizon = ctx.positive("horizon");
  Produced out;
  out.result = to_json(ap_certificate(ctx.system, a, eps, gap_max, horizon));
  out.result["certified"] = !out.result["certificate"].is_null();
  return out;
}

Produced chain_analyze_run(Context& ctx) {
  const auto s = ctx.set("set");
  const auto eps = ctx.params.number("eps");
  if (eps < 0) throw ConfigError("field '" + ctx.params.field("eps") + "' must be >= 0");
  const auto g = build_digraph(ctx.system, s, eps);
  Produced out;
  std::size_t edges = 0;
  for (const auto& row : g.edges) edges += row.size();
  out.result = {{"set", set_to_json(s)}, {"eps", eps}, {"vertices", s.size()}, {"edges", edges}, {"ict", is_ict(g)}};
  if (s.size() <= kWeakIncompressibilityCap) {
    const bool wi = weak_incompressibility(ctx.system, s, eps);
    out.result["weak_incompressibility"] = wi;
    if (wi != is_ict(g)) out.violations.push_back("chain transitivity and weak incompressibility disagree on this set");
  } else {
    out.result["weak_incompressibility"] = nullptr;
  }
  out.files["digraph.dot"] = to_dot(g);
  return out;
}

Produced component_cycle_run(Context& ctx) {
  const auto s = ctx.set("set");
  const auto eps = ctx.params.number("eps");
  if (eps < 0) throw ConfigError("field '" + ctx.params.field("eps") + "' must be >= 0");
  const auto d = component_cycle(ctx.system, s, eps);
  Produced out;
  out.result = json::parse(to_json(d));
  for (const auto& v : d.violations) out.violations.push_back("component cycle: " + v);
  if (const auto* lim = ctx.params.optional("orbit_limit")) {
    FieldReader r(*lim, ctx.params.field("orbit_limit"));
    const auto orbit = read_set(r.require("orbit"), r.field("orbit"), ctx.system, ctx.scenario.system);
    const auto base = read_set(r.require("base"), r.field("base"), ctx.system, ctx.scenario.system);
    const auto horizon = r.count("horizon");
    r.reject_unknown();
    if (base.size() != 1) throw ConfigError("field '" + r.field("base") + "' must be a single point");
    std::vector<Point> pts(orbit.begin(), orbit.end());
    const auto rep = orbit_limit_check(ctx.system, pts, base[0], s, eps, horizon);
    json dist = json::array();
    for (double x : rep.distances) dist.push_back(x);
    out.result["orbit_limit"] = {{"period", rep.period},
                                 {"base_component", set_to_json(rep.base_component)},
                                 {"distances", dist},
                                 {"complete", rep.complete},
                                 {"settled_from", rep.settled_from ? json(*rep.settled_from) : json(nullptr)}};
  }
  return out;
}

std::vector<Point> read_points(Context& ctx, const std::string& key) {
  const auto s = ctx.set(key);
  return {s.begin(), s.end()};
}

Produced scrambled_family_run(Context& ctx) {
  const auto base = ctx.set("base");
  std::vector<Point> anchors;
  if (ctx.params.has("anchors")) {
    anchors = read_points(ctx, "anchors");
  } else {
    ctx.params.optional("anchors");
    anchors = default_scramble_anchors();
  }
  ScrambleParams p;
  p.count = ctx.params.count("count", 0);
  p.eps = ctx.scale("eps", p.eps);
  p.horizon = ctx.positive("horizon", p.horizon);
  p.tail_fraction = ctx.params.number("tail_fraction", p.tail_fraction);
  p.eps_prox = ctx.scale("eps_prox", p.eps_prox);
  p.delta_dist = ctx.scale("delta_dist", p.delta_dist);
  p.jobs = ctx.jobs;
  const auto fam = scrambled_family(ctx.system, base, anchors, p);
  Produced out;
  out.result = to_json(fam);
  out.result["members"] = fam.family.size();
  const auto n = fam.family.size();
  std::vector<std::vector<double>> lo(n, std::vector<double>(n, 0.0)), hi = lo;
  for (std::size_t k = 0; k < fam.verdicts.size(); ++k) {
    const auto [i, j] = fam.pair_index[k];
    lo[i][j] = lo[j][i] = fam.verdicts[k].liminf_proxy;
    hi[i][j] = hi[j][i] = fam.verdicts[k].limsup_proxy;
  }
  out.files["liminf.csv"] = csv_banner(ctx) + matrix_csv(lo);
  out.files["limsup.csv"] = csv_banner(ctx) + matrix_csv(hi);
  for (std::size_t i = 0; i < n; ++i) {
    if (!fam.star_holds[i]) out.violations.push_back("scrambled family: return relation fails for member " + std::to_string(i));
  }
  return out;
}

Produced odometer_signature_run(Context& ctx) {
  const auto a = ctx.set("set");
  const auto bases = ctx.params.bases("bases");
  const auto eps = ctx.params.number("eps");
  const auto burn_in = ctx.params.count("burn_in", 0);
  const auto horizon = ctx.positive("horizon");
  const auto sample_eps = ctx.params.number("sample_eps", ctx.tolerance);
  if (horizon <= burn_in) throw ConfigError("field '" + ctx.params.field("horizon") + "' must exceed burn_in");
  const auto sample = omega_sample(ctx.system, a, burn_in, horizon, sample_eps);
  const auto sig = signature_match(sample, bases, ctx.system, eps);
  Produced out;
  out.result = to_json(sig);
  out.result["sample_size"] = sample.size();
  if (ctx.params.has("minimal_eps")) {
    const auto m = minimal_unique_check(sample, ctx.system, ctx.scale("minimal_eps"));
    out.result["minimal"] = to_json(m);
  }
  ctx.params.optional("minimal_eps");
  return out;
}

Produced entropy_growth_run(Context& ctx) {
  const auto eps = ctx.scale("eps");
  const auto n_max = ctx.positive("n_max");
  const auto& fam_spec = ctx.params.require("family");
  FieldReader f(fam_spec, ctx.params.field("family"));
  SetFamily family;
  std::string kind;
  if (f.has("random")) {
    kind = "random";
    FieldReader r(*f.optional("random"), f.field("random"));
    const auto count = r.count("count");
    const auto max_size = r.count("max_size");
    r.reject_unknown();
    family = random_family(ctx.system, count, max_size, ctx.seed);
  } else if (f.has("orbit_sample")) {
    kind = "orbit_sample";
    FieldReader r(*f.optional("orbit_sample"), f.field("orbit_sample"));
    const auto a = read_set(r.require("set"), r.field("set"), ctx.system, ctx.scenario.system);
    const auto burn_in = r.count("burn_in", 0);
    const auto horizon = r.count("horizon");
    const auto sample_eps = r.number("sample_eps", ctx.tolerance);
    r.reject_unknown();
    family = omega_sample(ctx.system, a, burn_in, horizon, sample_eps);
  } else if (f.has("all_subsets")) {
    kind = "all_subsets";
    f.optional("all_subsets");
    for (auto& s : all_subsets(ctx.system)) family.members.push_back(std::move(s));
    family.times.assign(family.members.size(), 0);
  } else {
    throw ConfigError("missing field '" + f.field("random") + "' (or orbit_sample, all_subsets)");
  }
  f.reject_unknown();
  const auto report = entropy_slope(ctx.system, family, n_max, eps);
  Produced out;
  out.result = to_json(report);
  out.result["family"] = {{"kind", kind}, {"size", family.size()}};
  out.result["zero_entropy_consistent"] = report.entropy_zero_consistent();
  out.files["counts.csv"] = csv_banner(ctx) + counts_csv(report);
  return out;
}

Produced verify_theorems_run(Context& ctx) {
  VerifyOptions opts;
  opts.seed = ctx.seed;
  opts.jobs = ctx.jobs;
  opts.tolerance = ctx.tolerance;
  std::vector<std::string> wanted;
  if (const auto* c = ctx.params.optional("checks")) {
    if (!c->is_array()) throw ConfigError("field '" + ctx.params.field("checks") + "' must be a list of check ids");
    for (const auto& id : *c) {
      if (!id.is_string()) throw ConfigError("field '" + ctx.params.field("checks") + "' must hold strings");
      wanted.push_back(id.get<std::string>());
    }
  }
  auto checks = theorem_checks(opts);
  for (const auto& id : wanted) {
    bool known = false;
    for (const auto& c : checks) known = known || c.id == id;
    if (!known) throw ConfigError("field '" + ctx.params.field("checks") + "': unknown check '" + id + "'");
  }
  Produced out;
  json rows = json::array();
  std::size_t passed = 0;
  for (const auto& c : checks) {
    if (!wanted.empty() && std::find(wanted.begin(), wanted.end(), c.id) == wanted.end()) continue;
    const auto r = c.run();
    rows.push_back(to_json(r));
    if (r.passed) ++passed;
    else out.violations.push_back("check " + r.id + " failed: " + r.detail);
  }
  out.result = {{"checks", rows}, {"passed", passed}, {"total", rows.size()}};
  return out;
}

using Runner = std::function<Produced(Context&)>;

const std::map<std::string, Runner>& runners() {
  static const std::map<std::string, Runner> table{
      {"orbit-series", orbit_series_run},         {"classify-pair", classify_pair_run},
      {"recurrence-scan", recurrence_scan_run},   {"ur-scan", ur_scan_run},
      {"ap-scan", ap_scan_run},                   {"chain-analyze", chain_analyze_run},
      {"component-cycle", component_cycle_run},   {"scrambled-family", scrambled_family_run},
      {"odometer-signature", odometer_signature_run}, {"entropy-growth", entropy_growth_run},
      {"verify-theorems", verify_theorems_run},
  };
  return table;
}

const json* lookup(const json& result, const std::string& key) {
  if (!key.empty() && key.front() == '/') {
    const json::json_pointer ptr(key);
    return result.contains(ptr) ? &result.at(ptr) : nullptr;
  }
  return result.contains(key) ? &result.at(key) : nullptr;
}

// "expect": {"key": value} or {"key": {"lt"|"le"|"gt"|"ge"|"eq": value}}; keys starting
// with '/' are JSON pointers into the result.
std::vector<std::string> check_expectations(const json& expect, const json& result, const std::string& field,
                                            json& record) {
  if (!expect.is_object()) throw ConfigError("field '" + field + "' must be an object");
  std::vector<std::string> failures;
  for (const auto& [key, want] : expect.items()) {
    const json* got = lookup(result, key);
    if (!got) throw ConfigError("field '" + field + "." + key + "' names nothing in the " + "result");
    bool ok = true;
    if (want.is_object()) {
      for (const auto& [op, bound] : want.items()) {
        if (op == "eq") {
          ok = ok && *got == bound;
          continue;
        }
        if (!got->is_number() || !bound.is_number())
          throw ConfigError("field '" + field + "." + key + "." + op + "' compares non-numbers");
        const double g = got->get<double>(), b = bound.get<double>();
        if (op == "lt") ok = ok && g < b;
        else if (op == "le") ok = ok && g <= b;
        else if (op == "gt") ok = ok && g > b;
        else if (op == "ge") ok = ok && g >= b;
        else throw ConfigError("field '" + field + "." + key + "': unknown comparison '" + op + "'");
      }
    } else {
      ok = *got == want;
    }
    record.push_back({{"key", key}, {"expected", want}, {"observed", *got}, {"passed", ok}});
    if (!ok) failures.push_back("expectation " + key + " failed: expected " + want.dump() + ", observed " + got->dump());
  }
  return failures;
}

}  // namespace

RunOutcome run_scenario(const Scenario& scenario, const RunOptions& options) {
  const auto output = options.out ? *options.out : scenario.output;
  if (output.empty()) throw ConfigError("missing field 'output' (or pass --out)");
  Context ctx{scenario,
              make_system(scenario.system),
              FieldReader(scenario.parameters, "parameters"),
              options.seed.value_or(scenario.seed.value_or(kDefaultSeed)),
              options.tolerance.value_or(kDefaultTolerance),
              std::max(1u, options.jobs)};
  if (!(ctx.tolerance > 0)) throw ConfigError("--tolerance must be > 0");

  const json* expect = ctx.params.optional("expect");
  auto produced = runners().at(scenario.experiment)(ctx);
  ctx.params.reject_unknown();

  json expectations = json::array();
  auto failures = produced.violations;
  if (expect) {
    auto more = check_expectations(*expect, produced.result, "parameters.expect", expectations);
    failures.insert(failures.end(), more.begin(), more.end());
  }

  json report = {{"experiment", scenario.experiment},
                 {"scenario_hash", scenario.hash},
                 {"seed", ctx.seed},
                 {"tolerance", ctx.tolerance},
                 {"system", scenario.raw.at("system")},
                 {"parameters", scenario.parameters},
                 {"result", produced.result},
                 {"expectations", expectations},
                 {"violations", failures},
                 {"status", failures.empty() ? "ok" : "violated"}};
  json files = json::object();
  for (const auto& [name, contents] : produced.files) files[name] = fnv1a_hex(contents);
  report["files"] = files;

  RunOutcome outcome;
  std::filesystem::create_directories(output);
  for (const auto& [name, contents] : produced.files) {
    write_atomic(output / name, contents);
    outcome.files.push_back(output / name);
  }
  write_atomic(output / "report.json", report.dump(2) + "\n");
  outcome.files.push_back(output / "report.json");
  outcome.messages = failures;
  outcome.exit_code = failures.empty() ? kOk : kShadowViolated;
  return outcome;
}

RunOutcome run_scenario_file(const std::filesystem::path& path, const std::string& verb, const RunOptions& options) {
  RunOutcome outcome;
  try {
    const auto scenario = load_scenario(path);
    if (!verb.empty() && scenario.experiment != verb)
      throw ConfigError("field 'experiment' is '" + scenario.experiment + "' but the verb is '" + verb + "'");
    return run_scenario(scenario, options);
  } catch (const json::exception& e) {
    outcome.messages.push_back(path.string() + ": " + e.what());
  } catch (const std::filesystem::filesystem_error& e) {
    outcome.messages.push_back(path.string() + ": " + e.what());
  } catch (const std::logic_error& e) {
    // ConfigError, invalid_argument, length_error and out_of_range from parameter checks
    outcome.messages.push_back(path.string() + ": " + e.what());
  } catch (const std::runtime_error& e) {
    outcome.messages.push_back(path.string() + ": " + e.what());
  }
  outcome.exit_code = kConfigError;
  return outcome;
}

}  // namespace hyperlab::cli
