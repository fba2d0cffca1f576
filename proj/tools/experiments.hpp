#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "scenario.hpp"

namespace hyperlab::cli {

enum ExitCode : int { kOk = 0, kConfigError = 1, kShadowViolated = 2 };

struct RunOptions {
  std::optional<std::filesystem::path> out;
  std::optional<std::uint64_t> seed;
  std::optional<double> tolerance;
  unsigned jobs = 1;
};

struct RunOutcome {
  int exit_code = kOk;
  std::vector<std::string> messages;  // one per failed check or config problem
  std::vector<std::filesystem::path> files;
};

RunOutcome run_scenario(const Scenario& scenario, const RunOptions& options);

// Loads and runs; configuration problems become exit code 1 instead of exceptions.
RunOutcome run_scenario_file(const std::filesystem::path& path, const std::string& verb, const RunOptions& options);

}  // namespace hyperlab::cli
