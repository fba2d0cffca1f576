#include <algorithm>
#include <atomic>
#include <iostream>
#include <thread>

#include <CLI11.hpp>

#include "experiments.hpp"

namespace {

using hyperlab::cli::RunOptions;
using hyperlab::cli::RunOutcome;

struct Flags {
  std::vector<std::string> scenarios;
  std::string out;
  std::uint64_t seed = 0;
  unsigned jobs = 1;
  double tolerance = 0;
};

void add_flags(CLI::App* cmd, Flags& flags, bool many) {
  if (many)
    cmd->add_option("--scenario", flags.scenarios, "scenario JSON files; independent scenarios run concurrently")
        ->required()
        ->check(CLI::ExistingFile);
  else
    cmd->add_option("--scenario", flags.scenarios, "scenario JSON file")->required()->expected(1);
  cmd->add_option("--out", flags.out, "output directory (overrides the scenario's output field)");
  cmd->add_option("--seed", flags.seed, "seed for randomized experiments");
  cmd->add_option("--jobs", flags.jobs, "worker threads")->envname("HYPERLAB_JOBS")->check(CLI::Range(1u, 256u));
  cmd->add_option("--tolerance", flags.tolerance, "sample dedup scale and metric slack")
      ->check(CLI::PositiveNumber);
}

RunOptions options_from(const CLI::App* cmd, const Flags& flags) {
  RunOptions o;
  if (cmd->count("--out")) o.out = flags.out;
  if (cmd->count("--seed")) o.seed = flags.seed;
  if (cmd->count("--tolerance")) o.tolerance = flags.tolerance;
  o.jobs = flags.jobs;
  return o;
}

void report(const std::string& scenario, const RunOutcome& r) {
  for (const auto& m : r.messages) std::cerr << (r.exit_code == 1 ? "config error: " : "violation: ") << m << "\n";
  if (r.exit_code != 1)
    std::cout << scenario << ": " << (r.exit_code == 0 ? "ok" : "violated") << ", " << r.files.size()
              << " file(s) written\n";
}

int combine(int a, int b) {
  if (a == 1 || b == 1) return 1;
  return std::max(a, b);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hyperspace dynamics laboratory: scenario-driven experiments on periodic homeomorphisms"};
  app.require_subcommand(1);

  Flags flags;
  std::vector<std::pair<CLI::App*, std::string>> verbs;
  for (const auto& name : hyperlab::cli::experiment_names()) {
    auto* cmd = app.add_subcommand(name, "run a " + name + " scenario");
    add_flags(cmd, flags, false);
    verbs.emplace_back(cmd, name);
  }
  auto* run = app.add_subcommand("run", "run one or more scenarios of any experiment");
  add_flags(run, flags, true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  for (const auto& [cmd, name] : verbs) {
    if (!cmd->parsed()) continue;
    const auto r = hyperlab::cli::run_scenario_file(flags.scenarios.front(), name, options_from(cmd, flags));
    report(flags.scenarios.front(), r);
    return r.exit_code;
  }

  // run: scenarios are independent, so spread them over the worker threads.
  auto opts = options_from(run, flags);
  const auto n = flags.scenarios.size();
  if (n > 1 && opts.out) {
    std::cerr << "config error: --out needs a single scenario\n";
    return 1;
  }
  const unsigned workers = std::min<unsigned>(opts.jobs, static_cast<unsigned>(n));
  auto per_scenario = opts;
  if (workers > 1) per_scenario.jobs = 1;
  std::vector<RunOutcome> outcomes(n);
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (auto i = next++; i < n; i = next++)
      outcomes[i] = hyperlab::cli::run_scenario_file(flags.scenarios[i], "", per_scenario);
  };
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < workers; ++t) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();

  int code = 0;
  for (std::size_t i = 0; i < n; ++i) {
    report(flags.scenarios[i], outcomes[i]);
    code = combine(code, outcomes[i].exit_code);
  }
  return code;
}
