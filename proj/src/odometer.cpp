#include "hyperlab/odometer.hpp"

#include <cmath>
#include <limits>
#include <set>
#include <stdexcept>
#include <unordered_map>


namespace hyperlab {

namespace {

void require_same_bases(const OdometerAddress& x, const OdometerAddress& y, const char* op) {
  if (x.bases != y.bases) throw std::invalid_argument(std::string(op) + ": addresses have different bases");
}

std::uint64_t bases_product(const std::vector<std::uint32_t>& bases) {
  std::uint64_t p = 1;
  for (auto j : bases) {
    if (p > std::numeric_limits<std::uint64_t>::max() / j) throw std::overflow_error("odometer: product of bases overflows");
    p *= j;
  }
  return p;
}

}  // namespace

OdometerAddress::OdometerAddress(std::vector<std::uint32_t> b, std::vector<std::uint32_t> d)
    : bases(std::move(b)), digits(std::move(d)) {
  if (bases.size() != digits.size()) throw std::invalid_argument("OdometerAddress: digits and bases differ in length");
  for (std::size_t i = 0; i < bases.size(); ++i) {
    if (bases[i] < 2) throw std::invalid_argument("OdometerAddress: every base must be >= 2");
    if (digits[i] >= bases[i]) throw std::invalid_argument("OdometerAddress: digit out of range");
  }
}

OdometerAddress OdometerAddress::zero(std::vector<std::uint32_t> bases) {
  const auto k = bases.size();
  return OdometerAddress(std::move(bases), std::vector<std::uint32_t>(k, 0));
}

OdometerAddress odo_add(const OdometerAddress& x, const OdometerAddress& y) {
  require_same_bases(x, y, "odo_add");
  OdometerAddress out = x;
  std::uint32_t carry = 0;
  for (std::size_t i = 0; i < x.digits.size(); ++i) {
    const std::uint64_t s = std::uint64_t{x.digits[i]} + y.digits[i] + carry;
    out.digits[i] = static_cast<std::uint32_t>(s % x.bases[i]);
    carry = s >= x.bases[i] ? 1 : 0;
  }
  return out;
}

OdometerAddress f_alpha(const OdometerAddress& x) {
  auto one = OdometerAddress::zero(x.bases);
  if (!one.digits.empty()) one.digits[0] = 1;
  return odo_add(x, one);
}

double d_alpha(const OdometerAddress& x, const OdometerAddress& y) {
  require_same_bases(x, y, "d_alpha");
  double d = 0.0;
  for (std::size_t i = 0; i < x.digits.size(); ++i)
    if (x.digits[i] != y.digits[i]) d += std::ldexp(1.0, -static_cast<int>(i + 1));
  return d;
}

OdometerAddress address_of(std::uint64_t t, const std::vector<std::uint32_t>& bases) {
  auto a = OdometerAddress::zero(bases);
  for (std::size_t i = 0; i < bases.size(); ++i) {
    a.digits[i] = static_cast<std::uint32_t>(t % bases[i]);
    t /= bases[i];
  }
  return a;
}

std::vector<OdometerAddress> all_addresses(const std::vector<std::uint32_t>& bases) {
  const auto total = bases_product(bases);
  std::vector<OdometerAddress> out;
  out.reserve(total);
  for (std::uint64_t t = 0; t < total; ++t) out.push_back(address_of(t, bases));
  return out;
}

System odometer_system(const std::vector<std::uint32_t>& bases) {
  const auto addresses = all_addresses(bases);
  const auto n = addresses.size();
  std::vector<double> entries(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) entries[i * n + j] = d_alpha(addresses[i], addresses[j]);
  std::vector<std::string> ids;
  for (const auto& a : addresses) {
    std::string id;
    for (auto d : a.digits) id += std::to_string(d) + ".";
    if (!id.empty()) id.pop_back();
    ids.push_back(id);
  }
  // address t steps to t+1 in mixed-radix order
  std::vector<std::size_t> images(n);
  for (std::size_t i = 0; i < n; ++i) images[i] = (i + 1) % n;
  return from_permutation(n, images, DistanceTable::make(n, std::move(entries), std::move(ids)));
}

OdometerSignature signature_match(const SetFamily& orbit_sample, const std::vector<std::uint32_t>& bases,
                                  const System& system, double eps) {
  if (bases.empty()) throw std::invalid_argument("signature_match: no bases given");
  for (auto j : bases)
    if (j < 2) throw std::invalid_argument("signature_match: every base must be >= 2");
  const auto total = bases_product(bases);
  const auto m = orbit_sample.size();
  if (m < total) {
    throw std::invalid_argument("signature_match: sample has " + std::to_string(m) + " members but depth " +
                                std::to_string(bases.size()) + " needs at least " + std::to_string(total));
  }

  OdometerSignature sig;
  sig.depth = bases.size();
  sig.bases = bases;
  sig.eps = eps;
  for (auto t : orbit_sample.times) sig.cylinder_assignment.push_back(address_of(t, bases));

  std::unordered_map<std::uint64_t, std::size_t> by_time;
  for (std::size_t i = 0; i < m; ++i) by_time.emplace(orbit_sample.times[i], i);

  std::uint64_t modulus = 1;
  for (std::size_t level = 0; level < bases.size(); ++level) {
    const auto parent = modulus;
    modulus *= bases[level];
    // children seen under each parent class
    std::vector<std::set<std::uint64_t>> children(parent);
    std::vector<std::vector<std::size_t>> classes(modulus);
    for (std::size_t i = 0; i < m; ++i) {
      const auto r = orbit_sample.times[i] % modulus;
      children[r % parent].insert(r);
      classes[r].push_back(i);
    }
    for (std::uint64_t c = 0; c < parent; ++c) {
      if (children[c].size() != bases[level]) {
        sig.failures.push_back("depth " + std::to_string(level + 1) + ": class " + std::to_string(c) + " splits into " +
                               std::to_string(children[c].size()) + " classes, expected " +
                               std::to_string(bases[level]));
      }
    }
    if (!sig.failures.empty()) break;

    for (std::size_t i = 0; i < m; ++i) {
      const auto t = orbit_sample.times[i];
      const auto& target = classes[(t + 1) % modulus];
      const auto image = induced_step(system, orbit_sample.members[i]);
      auto close = [&](std::size_t j) {
        return eps <= 0.0 ? image == orbit_sample.members[j] : hausdorff(image, orbit_sample.members[j]) < eps;
      };
      bool ok = false;
      if (const auto it = by_time.find(t + 1); it != by_time.end()) ok = close(it->second);
      for (std::size_t k = 0; k < target.size() && !ok; ++k) ok = close(target[k]);
      if (!ok) {
        sig.failures.push_back("depth " + std::to_string(level + 1) + ": image of the member at time " +
                               std::to_string(t) + " is not within eps of class " +
                               std::to_string((t + 1) % modulus));
        break;
      }
    }
    if (!sig.failures.empty()) break;
  }
  sig.verified_cyclic = sig.failures.empty();
  return sig;
}

nlohmann::json to_json(const OdometerAddress& a) { return {{"bases", a.bases}, {"digits", a.digits}}; }

nlohmann::json to_json(const OdometerSignature& s) {
  nlohmann::json cyl = nlohmann::json::array();
  for (const auto& a : s.cylinder_assignment) cyl.push_back(a.digits);
  return {{"depth", s.depth},
          {"bases", s.bases},
          {"eps", s.eps},
          {"verified_cyclic", s.verified_cyclic},
          {"failures", s.failures},
          {"cylinder_assignment", cyl}};
}

}  // namespace hyperlab
