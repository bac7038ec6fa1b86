#pragma once

#include <string>
#include <vector>

#include "synclab/invariants.hpp"
#include "synclab/scenario.hpp"

namespace synclab {

inline constexpr int kExitOk = 0;
inline constexpr int kExitError = 1;
inline constexpr int kExitVerdictFailed = 2;

struct RunResult {
  int exit_code = kExitOk;
  std::vector<DriftReport> reports;
  std::vector<std::string> outputs;  // paths relative to the output root
  json manifest;
};

// Integrates the scenario and writes trajectory.csv, observables.csv, drift.json, drift.csv and
// manifest.json (plus observables.dat when requested) under out_root/<out_dir>.
// Throws Error for schema, I/O and integration failures.
RunResult run_scenario(const ScenarioSpec& spec, const std::string& out_root);

// RFC 4180 field quoting.
std::string csv_field(const std::string& s);

}  // namespace synclab
