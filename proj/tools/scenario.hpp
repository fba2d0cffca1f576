#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "hyperlab/sets.hpp"
#include "hyperlab/system.hpp"

namespace hyperlab::cli {

inline constexpr std::uint64_t kDefaultSeed = 20240601;

const std::vector<std::string>& experiment_names();

// Reads keys from a JSON object, remembering which ones were touched so that
// typos surface as "unknown field" instead of being silently ignored.
class FieldReader {
 public:
  FieldReader(const nlohmann::json& object, std::string path);

  bool has(const std::string& key) const;
  const nlohmann::json& require(const std::string& key);
  const nlohmann::json* optional(const std::string& key);

  std::uint64_t count(const std::string& key);  // non-negative integer
  std::uint64_t count(const std::string& key, std::uint64_t fallback);
  double number(const std::string& key);
  double number(const std::string& key, double fallback);
  std::string text(const std::string& key);
  std::vector<double> numbers(const std::string& key);  // a number or a list of numbers
  std::vector<std::uint32_t> bases(const std::string& key);

  std::string field(const std::string& key) const { return path_.empty() ? key : path_ + "." + key; }
  void reject_unknown() const;

 private:
  const nlohmann::json& object_;
  std::string path_;
  std::vector<std::string> seen_;
};

struct SystemSpec {
  enum class Kind { rotating_houses, permutation, odometer } kind = Kind::rotating_houses;
  HousesConfig rotating_houses;
  std::filesystem::path permutation_file;
  std::vector<std::uint32_t> odometer_bases;
};

struct Scenario {
  nlohmann::json raw;
  std::filesystem::path source;  // empty when read from a string
  std::string hash;              // FNV-1a of the canonical dump
  SystemSpec system;
  std::string experiment;
  nlohmann::json parameters;
  std::filesystem::path output;
  std::optional<std::uint64_t> seed;
};

Scenario parse_scenario(const nlohmann::json& raw, const std::filesystem::path& source);
Scenario load_scenario(const std::filesystem::path& path);

System make_system(const SystemSpec& spec);

// Set specification: any combination of
//   "builtin": "C" | "D" | "H" (with "depth", "max_level", "mesh"),
//   "houses": [[n, k], ...], "circle": [[num, den], ...], "orbits": [n, ...] (whole level orbits),
//   "vertices": [i, ...];
// the result is the union of all parts.
FiniteSet read_set(const nlohmann::json& spec, const std::string& path, const System& system,
                   const SystemSpec& system_spec);

}  // namespace hyperlab::cli
