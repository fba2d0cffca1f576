#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

#include "hyperlab/classifiers.hpp"
#include "hyperlab/hyperspace.hpp"

namespace hyperlab {

// Circle points as [angle_num, angle_den, height_num, height_den]; abstract points as [index].
nlohmann::json point_to_json(const Point& p);
nlohmann::json set_to_json(const FiniteSet& s);
nlohmann::json family_to_json(const SetFamily& f);

nlohmann::json to_json(const RecurrenceResult& r);
nlohmann::json to_json(const URScan& s);
nlohmann::json to_json(const APScan& s);
nlohmann::json to_json(const PairVerdict& v);
nlohmann::json to_json(const std::vector<ExpansionRow>& rows);
nlohmann::json to_json(const ScrambledFamily& f);
nlohmann::json to_json(const MinimalReport& m);

// "n,dH" rows
std::string series_csv(const ReturnStats& stats);
// square matrix, no header
std::string matrix_csv(const std::vector<std::vector<double>>& m);

// Shortest round-trip decimal text, '.' separator regardless of locale.
std::string format_double(double x);

// Writes to a sibling temp file and renames it into place.
void write_atomic(const std::filesystem::path& path, const std::string& contents);

// 64-bit FNV-1a, rendered as 16 hex digits.
std::string fnv1a_hex(const std::string& bytes);

}  // namespace hyperlab
