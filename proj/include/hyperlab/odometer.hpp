#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include <json.hpp>

#include "hyperlab/hyperspace.hpp"

namespace hyperlab {

/// Depth-k prefix (x_1, ..., x_k) of an adding-machine sequence with bases (j_1, ..., j_k).
struct OdometerAddress {
  std::vector<std::uint32_t> bases;  // each >= 2
  std::vector<std::uint32_t> digits;  // digits[i] < bases[i]

  OdometerAddress() = default;
  OdometerAddress(std::vector<std::uint32_t> bases, std::vector<std::uint32_t> digits);
  static OdometerAddress zero(std::vector<std::uint32_t> bases);

  friend bool operator==(const OdometerAddress&, const OdometerAddress&) = default;
  friend auto operator<=>(const OdometerAddress&, const OdometerAddress&) = default;
};

// Digit-wise sum with carry; the carry out of the last digit is dropped.
OdometerAddress odo_add(const OdometerAddress& x, const OdometerAddress& y);
// x + (1, 0, ..., 0)
OdometerAddress f_alpha(const OdometerAddress& x);
// Σ [x_i != y_i] 2^{-i}
double d_alpha(const OdometerAddress& x, const OdometerAddress& y);

// Every address of the given bases, in mixed-radix order (first digit fastest).
std::vector<OdometerAddress> all_addresses(const std::vector<std::uint32_t>& bases);
// Mixed-radix digits of t.
OdometerAddress address_of(std::uint64_t t, const std::vector<std::uint32_t>& bases);

// f_alpha on the depth-k addresses as a permutation system with d_alpha as its metric.
// Vertex i is all_addresses(bases)[i].
System odometer_system(const std::vector<std::uint32_t>& bases);

struct OdometerSignature {
  std::size_t depth = 0;
  std::vector<std::uint32_t> bases;
  std::vector<OdometerAddress> cylinder_assignment;  // per sample member
  bool verified_cyclic = false;
  std::vector<std::string> failures;
  double eps = 0;
};

// Classes of the sample by first-seen time modulo j_1, j_1 j_2, ...; each level
// must split every class into exactly j_i classes, and the induced map must send
// each member eps-close to the next class. Throws std::invalid_argument when
// the sample holds fewer members than the product of the bases.
OdometerSignature signature_match(const SetFamily& orbit_sample, const std::vector<std::uint32_t>& bases,
                                  const System& system, double eps);

nlohmann::json to_json(const OdometerAddress& a);
nlohmann::json to_json(const OdometerSignature& s);

}  // namespace hyperlab
