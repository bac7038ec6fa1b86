#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "synclab/integrate.hpp"
#include "synclab/serialize.hpp"
#include "synclab/state.hpp"

namespace synclab {

enum class ModelKind { Phase, Sphere, Unitary };
const char* to_string(ModelKind m);

struct ScenarioSpec {
  std::string id;
  ModelKind model = ModelKind::Phase;
  std::uint64_t seed = 0;
  json initial;
  IntegratorSettings settings;
  double t_final = 0.0;
  std::vector<std::string> observables;
  std::vector<std::string> invariants;  // checked by drift_report
  double tolerance = 1e-6;
  std::string out_dir;                  // relative to the run's output root; defaults to id
  bool dat_mirrors = false;
  json source;                          // document after overrides
};

struct ScenarioOverrides {
  std::optional<std::uint64_t> seed;
  std::optional<double> dt;
};

ScenarioSpec parse_scenario(const json& doc, const ScenarioOverrides& ov = {});
ScenarioSpec load_scenario(const std::string& path, const ScenarioOverrides& ov = {});

using ModelConfig = std::variant<PhaseConfig, SphereConfig, UnitaryConfig>;
ModelConfig build_config(const ScenarioSpec& spec);

json resolved_settings(const ScenarioSpec& spec);
// Canonical serialization of the scenario (sorted keys, overrides applied).
std::string canonical_input(const ScenarioSpec& spec);

}  // namespace synclab
