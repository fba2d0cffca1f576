#include "scenario.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "hyperlab/io.hpp"
#include "hyperlab/odometer.hpp"

namespace hyperlab::cli {

using nlohmann::json;

const std::vector<std::string>& experiment_names() {
  static const std::vector<std::string> names{
      "orbit-series",     "classify-pair",  "recurrence-scan",    "ur-scan",        "ap-scan",        "chain-analyze",
      "component-cycle", "scrambled-family", "odometer-signature", "entropy-growth", "verify-theorems"};
  return names;
}

FieldReader::FieldReader(const json& object, std::string path) : object_(object), path_(std::move(path)) {
  if (!object_.is_object()) throw ConfigError("field '" + (path_.empty() ? "<root>" : path_) + "' must be an object");
}

bool FieldReader::has(const std::string& key) const { return object_.contains(key); }

const json& FieldReader::require(const std::string& key) {
  seen_.push_back(key);
  if (!object_.contains(key)) throw ConfigError("missing field '" + field(key) + "'");
  return object_.at(key);
}

const json* FieldReader::optional(const std::string& key) {
  seen_.push_back(key);
  return object_.contains(key) ? &object_.at(key) : nullptr;
}

namespace {

std::uint64_t as_count(const json& v, const std::string& name) {
  if (!v.is_number_integer() || (v.is_number_integer() && !v.is_number_unsigned() && v.get<std::int64_t>() < 0))
    throw ConfigError("field '" + name + "' must be a non-negative integer");
  return v.get<std::uint64_t>();
}

double as_number(const json& v, const std::string& name) {
  if (!v.is_number()) throw ConfigError("field '" + name + "' must be a number");
  return v.get<double>();
}

}  // namespace

std::uint64_t FieldReader::count(const std::string& key) { return as_count(require(key), field(key)); }

std::uint64_t FieldReader::count(const std::string& key, std::uint64_t fallback) {
  const auto* v = optional(key);
  return v ? as_count(*v, field(key)) : fallback;
}

double FieldReader::number(const std::string& key) { return as_number(require(key), field(key)); }

double FieldReader::number(const std::string& key, double fallback) {
  const auto* v = optional(key);
  return v ? as_number(*v, field(key)) : fallback;
}

std::string FieldReader::text(const std::string& key) {
  const auto& v = require(key);
  if (!v.is_string()) throw ConfigError("field '" + field(key) + "' must be a string");
  return v.get<std::string>();
}

std::vector<double> FieldReader::numbers(const std::string& key) {
  const auto& v = require(key);
  std::vector<double> out;
  if (v.is_array()) {
    for (std::size_t i = 0; i < v.size(); ++i) out.push_back(as_number(v[i], field(key) + "[" + std::to_string(i) + "]"));
  } else {
    out.push_back(as_number(v, field(key)));
  }
  if (out.empty()) throw ConfigError("field '" + field(key) + "' must not be empty");
  return out;
}

std::vector<std::uint32_t> FieldReader::bases(const std::string& key) {
  const auto& v = require(key);
  if (!v.is_array() || v.empty()) throw ConfigError("field '" + field(key) + "' must be a non-empty list of integers >= 2");
  std::vector<std::uint32_t> out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const auto b = as_count(v[i], field(key) + "[" + std::to_string(i) + "]");
    if (b < 2 || b > 0xffffffffu) throw ConfigError("field '" + field(key) + "' entries must be integers >= 2");
    out.push_back(static_cast<std::uint32_t>(b));
  }
  return out;
}

void FieldReader::reject_unknown() const {
  for (const auto& [key, value] : object_.items()) {
    if (std::find(seen_.begin(), seen_.end(), key) == seen_.end())
      throw ConfigError("unknown field '" + field(key) + "'");
  }
}

namespace {

std::vector<std::int64_t> read_levels(const json& v, const std::string& name) {
  std::vector<std::int64_t> out;
  if (v.is_object()) {
    FieldReader r(v, name);
    const auto from = r.count("from");
    const auto to = r.count("to");
    r.reject_unknown();
    if (from < 1 || to < from) throw ConfigError("field '" + name + "' needs 1 <= from <= to");
    for (auto n = from; n <= to; ++n) out.push_back(static_cast<std::int64_t>(n));
    return out;
  }
  if (!v.is_array()) throw ConfigError("field '" + name + "' must be a list of levels or {from, to}");
  for (std::size_t i = 0; i < v.size(); ++i) {
    const auto n = as_count(v[i], name + "[" + std::to_string(i) + "]");
    if (n < 1) throw ConfigError("field '" + name + "' levels must be >= 1");
    out.push_back(static_cast<std::int64_t>(n));
  }
  return out;
}

SystemSpec read_system(const json& v, const std::filesystem::path& base_dir) {
  FieldReader r(v, "system");
  SystemSpec spec;
  int kinds = 0;
  if (const auto* e = r.optional("rotating_houses")) {
    ++kinds;
    spec.kind = SystemSpec::Kind::rotating_houses;
    FieldReader c(*e, "system.rotating_houses");
    if (const auto* l = c.optional("levels")) spec.rotating_houses.levels = read_levels(*l, c.field("levels"));
    if (const auto* l = c.optional("extra_levels")) spec.rotating_houses.extra_levels = read_levels(*l, c.field("extra_levels"));
    spec.rotating_houses.circle_mesh = static_cast<std::int64_t>(c.count("circle_mesh", 256));
    c.reject_unknown();
    if (spec.rotating_houses.circle_mesh < 1) throw ConfigError("field 'system.rotating_houses.circle_mesh' must be >= 1");
  }
  if (const auto* p = r.optional("permutation")) {
    ++kinds;
    spec.kind = SystemSpec::Kind::permutation;
    if (!p->is_string()) throw ConfigError("field 'system.permutation' must be a file path");
    std::filesystem::path file = p->get<std::string>();
    if (file.is_relative()) file = base_dir / file;
    if (!std::filesystem::exists(file))
      throw ConfigError("field 'system.permutation': file " + file.string() + " does not exist");
    spec.permutation_file = file;
  }
  if (const auto* o = r.optional("odometer")) {
    ++kinds;
    spec.kind = SystemSpec::Kind::odometer;
    FieldReader c(*o, "system.odometer");
    spec.odometer_bases = c.bases("bases");
    c.reject_unknown();
  }
  r.reject_unknown();
  if (kinds != 1) throw ConfigError("field 'system' must name exactly one of rotating_houses, permutation, odometer");
  return spec;
}

}  // namespace

Scenario parse_scenario(const json& raw, const std::filesystem::path& source) {
  Scenario s;
  s.raw = raw;
  s.source = source;
  s.hash = fnv1a_hex(raw.dump());
  FieldReader r(raw, "");
  const auto base_dir = source.empty() ? std::filesystem::path(".") : source.parent_path();
  s.system = read_system(r.require("system"), base_dir.empty() ? std::filesystem::path(".") : base_dir);
  s.experiment = r.text("experiment");
  const auto& names = experiment_names();
  if (std::find(names.begin(), names.end(), s.experiment) == names.end())
    throw ConfigError("field 'experiment': unknown experiment '" + s.experiment + "'");
  s.parameters = r.require("parameters");
  if (!s.parameters.is_object()) throw ConfigError("field 'parameters' must be an object");
  if (const auto* out = r.optional("output")) {
    if (!out->is_string() || out->get<std::string>().empty())
      throw ConfigError("field 'output' must be a non-empty directory path");
    s.output = out->get<std::string>();
  }
  if (const auto* seed = r.optional("seed")) s.seed = as_count(*seed, "seed");
  r.optional("description");
  r.reject_unknown();
  return s;
}

Scenario load_scenario(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot open scenario file " + path.string());
  std::stringstream buffer;
  buffer << in.rdbuf();
  json raw;
  try {
    raw = json::parse(buffer.str());
  } catch (const json::parse_error& e) {
    throw ConfigError("scenario " + path.string() + " is not valid JSON: " + e.what());
  }
  return parse_scenario(raw, path);
}

System make_system(const SystemSpec& spec) {
  switch (spec.kind) {
    case SystemSpec::Kind::rotating_houses: return build_rotating_houses(spec.rotating_houses);
    case SystemSpec::Kind::permutation: return load_permutation_json(spec.permutation_file);
    case SystemSpec::Kind::odometer: return odometer_system(spec.odometer_bases);
  }
  throw ConfigError("unknown system kind");
}

namespace {

std::int64_t as_int(const json& v, const std::string& name) {
  if (!v.is_number_integer()) throw ConfigError("field '" + name + "' must be an integer");
  return v.get<std::int64_t>();
}

std::vector<Point> read_pairs(const json& v, const std::string& name, bool houses) {
  if (!v.is_array()) throw ConfigError("field '" + name + "' must be a list of [a, b] pairs");
  std::vector<Point> out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const auto item = name + "[" + std::to_string(i) + "]";
    if (!v[i].is_array() || v[i].size() != 2) throw ConfigError("field '" + item + "' must be a pair");
    const auto a = as_int(v[i][0], item);
    const auto b = as_int(v[i][1], item);
    if (houses) {
      if (a < 1 || b < 0 || b >= a) throw ConfigError("field '" + item + "' must be [n, k] with 0 <= k < n");
      out.push_back(house(a, b));
    } else {
      if (b < 1) throw ConfigError("field '" + item + "' must be [num, den] with den >= 1");
      out.push_back(circle_point(Rational(a, b)));
    }
  }
  return out;
}

}  // namespace

FiniteSet read_set(const json& spec, const std::string& path, const System& system, const SystemSpec& system_spec) {
  FieldReader r(spec, path);
  std::vector<Point> pts;
  const bool circle_space = system_spec.kind == SystemSpec::Kind::rotating_houses;
  if (const auto* b = r.optional("builtin")) {
    if (!circle_space) throw ConfigError("field '" + r.field("builtin") + "' needs an rotating_houses system");
    if (!b->is_string()) throw ConfigError("field '" + r.field("builtin") + "' must be \"C\", \"D\" or \"H\"");
    BuiltinRequest req;
    req.name = b->get<std::string>();
    req.depth = static_cast<int>(r.count("depth", 4));
    req.max_level = static_cast<std::int64_t>(r.count("max_level", 32));
    req.mesh = static_cast<std::int64_t>(r.count("mesh", 256));
    const auto s = builtin_sets(system, system_spec.rotating_houses, req);
    pts.insert(pts.end(), s.begin(), s.end());
  }
  for (const char* key : {"houses", "circle"}) {
    if (const auto* v = r.optional(key)) {
      if (!circle_space) throw ConfigError("field '" + r.field(key) + "' needs an rotating_houses system");
      auto more = read_pairs(*v, r.field(key), std::string(key) == "houses");
      for (const auto& p : more)
        if (!system.contains(p)) throw ConfigError("field '" + r.field(key) + "': " + to_string(p) + " is not in the carrier");
      pts.insert(pts.end(), more.begin(), more.end());
    }
  }
  if (const auto* v = r.optional("orbits")) {
    if (!circle_space) throw ConfigError("field '" + r.field("orbits") + "' needs an rotating_houses system");
    if (!v->is_array()) throw ConfigError("field '" + r.field("orbits") + "' must be a list of levels");
    for (std::size_t i = 0; i < v->size(); ++i) {
      const auto n = as_int((*v)[i], r.field("orbits") + "[" + std::to_string(i) + "]");
      if (n < 1 || !system.contains(house(n, 0)))
        throw ConfigError("field '" + r.field("orbits") + "': level " + std::to_string(n) + " is not in the carrier");
      for (std::int64_t k = 0; k < n; ++k) pts.push_back(house(n, k));
    }
  }
  if (const auto* v = r.optional("vertices")) {
    if (circle_space) throw ConfigError("field '" + r.field("vertices") + "' needs a permutation or odometer system");
    if (!v->is_array()) throw ConfigError("field '" + r.field("vertices") + "' must be a list of indices");
    for (std::size_t i = 0; i < v->size(); ++i) {
      const auto idx = as_count((*v)[i], r.field("vertices") + "[" + std::to_string(i) + "]");
      try {
        pts.push_back(vertex(system, idx));
      } catch (const std::out_of_range&) {
        throw ConfigError("field '" + r.field("vertices") + "': index " + std::to_string(idx) + " is outside the carrier");
      }
    }
  }
  r.reject_unknown();
  if (pts.empty()) throw ConfigError("field '" + path + "' describes an empty set");
  return FiniteSet(std::move(pts));
}

}  // namespace hyperlab::cli
