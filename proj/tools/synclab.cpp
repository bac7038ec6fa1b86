// synclab: run JSON scenarios or built-in check suites.
//
//   synclab run scenarios/kuramoto_I.json --out results
//   synclab --scenario scenarios/ --dt 0.01
//   synclab suite equilibria --seed 7
//
// Exit status: 0 success, 2 a drift verdict failed, 1 schema/I/O/integration error.
#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "synclab/checks.hpp"
#include "synclab/error.hpp"
#include "synclab/runner.hpp"

namespace fs = std::filesystem;

namespace {

struct Options {
  std::vector<std::string> scenarios;
  std::string suite;
  std::optional<std::uint64_t> seed;
  std::optional<double> dt;
  std::string out;
  bool quiet = false;
};

// A directory argument expands to its *.json files in name order.
std::vector<fs::path> expand(const std::vector<std::string>& args) {
  std::vector<fs::path> files;
  for (const auto& a : args) {
    if (fs::is_directory(a)) {
      std::vector<fs::path> dir;
      for (const auto& e : fs::directory_iterator(a))
        if (e.is_regular_file() && e.path().extension() == ".json") dir.push_back(e.path());
      std::sort(dir.begin(), dir.end());
      files.insert(files.end(), dir.begin(), dir.end());
    } else {
      files.emplace_back(a);
    }
  }
  return files;
}

int run_scenarios(const Options& opt) {
  const auto files = expand(opt.scenarios);
  if (files.empty()) {
    std::cerr << "synclab: no scenario files given\n";
    return synclab::kExitError;
  }
  int status = synclab::kExitOk;
  for (const auto& f : files) {
    int code = synclab::kExitOk;
    try {
      const auto spec = synclab::load_scenario(f.string(), {opt.seed, opt.dt});
      const auto res = synclab::run_scenario(spec, opt.out);
      code = res.exit_code;
      if (!opt.quiet) {
        std::cout << spec.id << ": " << (code == synclab::kExitOk ? "ok" : "verdict failed") << '\n';
        for (const auto& r : res.reports)
          std::cout << "  " << r.name << ": " << r.verdict() << " (rel " << r.max_rel_dev << ")\n";
      }
    } catch (const std::exception& e) {
      std::cerr << "synclab: " << f.string() << ": " << e.what() << '\n';
      code = synclab::kExitError;
    }
    // An error outranks a failed verdict.
    if (code == synclab::kExitError || status == synclab::kExitError) status = synclab::kExitError;
    else status = std::max(status, code);
  }
  return status;
}

int run_suite(const Options& opt) {
  std::vector<int> ids;
  try {
    ids = synclab::suite_criteria(opt.suite);
  } catch (const synclab::Error& e) {
    std::cerr << "synclab: " << e.what() << '\n';
    return synclab::kExitError;
  }
  const std::uint64_t seed = opt.seed.value_or(synclab::kDefaultSeed);
  std::vector<synclab::CheckResult> results;
  for (int id : ids) {
    results.push_back(synclab::run_criterion(id, seed));
    if (!opt.quiet && !results.back().passed())
      std::cerr << "  #" << id << ": " << results.back().summary() << '\n';
  }
  if (!opt.quiet) std::cout << synclab::summary_table(results);
  try {
    fs::create_directories(opt.out);
    const fs::path path = fs::path(opt.out) / ("suite-" + opt.suite + ".json");
    std::ofstream os(path, std::ios::binary);
    os << synclab::summary_json(opt.suite, seed, results).dump(2) << '\n';
    if (!os) throw synclab::Error(synclab::ErrorCode::Io, "cannot write " + path.string());
  } catch (const std::exception& e) {
    std::cerr << "synclab: " << e.what() << '\n';
    return synclab::kExitError;
  }
  const bool all = std::all_of(results.begin(), results.end(), [](const auto& r) { return r.passed(); });
  return all ? synclab::kExitOk : synclab::kExitVerdictFailed;
}

}  // namespace

int main(int argc, char** argv) {
  Options opt;
  const char* env_out = std::getenv("SYNCLAB_OUT");
  opt.out = env_out != nullptr && *env_out != '\0' ? env_out : "synclab-out";

  CLI::App app{"Frustrated synchronization scenarios and checks"};
  app.set_version_flag("--version", "synclab 0.1.0");
  auto add_common = [&](CLI::App* a) {
    a->add_option("--seed", opt.seed, "Override the scenario/suite seed");
    a->add_option("--out", opt.out, "Output root (default $SYNCLAB_OUT or ./synclab-out)");
    a->add_option("--dt", opt.dt, "Override the integrator step")->check(CLI::PositiveNumber);
    a->add_flag("--quiet", opt.quiet, "Only report errors");
  };
  add_common(&app);
  app.add_option("--scenario", opt.scenarios, "Scenario file or directory");
  app.add_option("--suite", opt.suite, "Built-in suite name");

  auto* run = app.add_subcommand("run", "Run scenario files");
  run->add_option("scenario", opt.scenarios, "Scenario file or directory")->required();
  add_common(run);
  auto* suite = app.add_subcommand("suite", "Run a built-in check suite");
  suite->add_option("name", opt.suite, "Suite name")->required();
  add_common(suite);
  app.require_subcommand(0, 1);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : synclab::kExitError;
  }

  if (!opt.suite.empty() && !opt.scenarios.empty()) {
    std::cerr << "synclab: give either a scenario or a suite, not both\n";
    return synclab::kExitError;
  }
  if (!opt.suite.empty()) return run_suite(opt);
  if (!opt.scenarios.empty()) return run_scenarios(opt);
  std::cerr << app.help();
  return synclab::kExitError;
}
