#include "hyperlab/io.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace hyperlab {

using nlohmann::json;

json point_to_json(const Point& p) {
  if (const auto* c = std::get_if<CirclePoint>(&p))
    return json::array({c->angle.num(), c->angle.den(), c->height.num(), c->height.den()});
  return json::array({std::get<AbstractPoint>(p).index});
}

json set_to_json(const FiniteSet& s) {
  json out = json::array();
  for (const auto& p : s) out.push_back(point_to_json(p));
  return out;
}

json family_to_json(const SetFamily& f) {
  json members = json::array();
  for (const auto& m : f.members) members.push_back(set_to_json(m));
  return {{"tolerance", f.tolerance}, {"times", f.times}, {"members", members}};
}

json to_json(const RecurrenceResult& r) {
  return {{"kind", "recurrence"},
          {"eps", r.eps},
          {"horizon", r.horizon},
          {"first_return", r.first_return ? json(*r.first_return) : json(nullptr)},
          {"min_observed", r.min_observed},
          {"argmin", r.argmin}};
}

json to_json(const URScan& s) {
  json cert = nullptr;
  if (s.certificate)
    cert = {{"eps", s.certificate->eps},
            {"N", s.certificate->N},
            {"K", s.certificate->K},
            {"max_observed", s.certificate->max_observed}};
  return {{"kind", "uniform_recurrence"}, {"certificate", cert}, {"worst_per_N", s.worst_per_N}};
}

json to_json(const APScan& s) {
  json cert = nullptr;
  if (s.certificate)
    cert = {{"eps", s.certificate->eps}, {"gap_bound", s.certificate->gap_bound}, {"horizon", s.certificate->horizon}};
  return {{"kind", "almost_periodic"}, {"certificate", cert}, {"largest_gap", s.largest_gap}};
}

json to_json(const PairVerdict& v) {
  return {{"liminf_proxy", v.liminf_proxy},
          {"limsup_proxy", v.limsup_proxy},
          {"proximal_at_scale", v.proximal_at_scale},
          {"asymptotic_at_scale", v.asymptotic_at_scale},
          {"li_yorke_at_scale", v.li_yorke_at_scale},
          {"separated_at_scale", v.separated_at_scale},
          {"horizon", v.horizon},
          {"tail_start", v.tail_start},
          {"eps_prox", v.eps_prox},
          {"delta_dist", v.delta_dist}};
}

json to_json(const std::vector<ExpansionRow>& rows) {
  json out = json::array();
  for (const auto& r : rows) {
    json row = {{"delta", r.delta}, {"modulus", r.modulus}, {"pairs", r.pairs}, {"witness_time", r.witness_time}};
    row["witness"] = r.witness ? json::array({point_to_json(r.witness->first), point_to_json(r.witness->second)})
                               : json(nullptr);
    out.push_back(row);
  }
  return out;
}

json to_json(const ScrambledFamily& f) {
  json anchors = json::array(), rejected = json::array(), pairs = json::array();
  for (const auto& a : f.anchors) anchors.push_back(point_to_json(a));
  for (const auto& [p, why] : f.rejected) rejected.push_back({{"point", point_to_json(p)}, {"reason", why}});
  for (std::size_t i = 0; i < f.verdicts.size(); ++i) {
    auto v = to_json(f.verdicts[i]);
    v["i"] = f.pair_index[i].first;
    v["j"] = f.pair_index[i].second;
    pairs.push_back(v);
  }
  return {{"anchors", anchors},
          {"rejected", rejected},
          {"recurrent", f.recurrent},
          {"star_holds", f.star_holds},
          {"base_returns", f.base_returns},
          {"all_li_yorke", f.all_li_yorke()},
          {"pairs", pairs}};
}

json to_json(const MinimalReport& m) {
  return {{"minimal", m.minimal}, {"distinct", m.distinct}, {"escaping", m.escaping}, {"unique", m.unique}};
}

std::string format_double(double x) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

std::string series_csv(const ReturnStats& stats) {
  std::string out = "n,dH\n";
  for (std::uint64_t n = 1; n <= stats.horizon; ++n) {
    out += std::to_string(n);
    out += ',';
    out += format_double(stats.at(n));
    out += '\n';
  }
  return out;
}

std::string matrix_csv(const std::vector<std::vector<double>>& m) {
  std::string out;
  for (const auto& row : m) {
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (j) out += ',';
      out += format_double(row[j]);
    }
    out += '\n';
  }
  return out;
}

void write_atomic(const std::filesystem::path& path, const std::string& contents) {
  auto tmp = path;
  tmp += ".tmp";
  {
    std::ofstream os(tmp, std::ios::binary | std::ios::trunc);
    if (!os) throw std::runtime_error("cannot open " + tmp.string() + " for writing");
    os.write(contents.data(), static_cast<std::streamsize>(contents.size()));
    if (!os) throw std::runtime_error("write failed for " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

std::string fnv1a_hex(const std::string& bytes) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace hyperlab
