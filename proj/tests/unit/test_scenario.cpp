#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "synclab/error.hpp"
#include "synclab/runner.hpp"
#include "synclab/scenario.hpp"

using namespace synclab;
namespace fs = std::filesystem;

namespace {

json phase_doc() {
  return json::parse(R"({
    "id": "unit",
    "model": "phase",
    "seed": 3,
    "initial": {"theta": {"random": "uniform", "n": 5}, "alpha": 0.2, "flavor": "Cosine"},
    "integrator": {"scheme": "RK4", "dt": 0.01, "T_final": 1.0},
    "observables": ["R"],
    "invariants": {"names": ["J", "K[0,1,2,3]"], "tolerance": 1e-6}
  })");
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

fs::path scratch(const std::string& name) {
  const fs::path p = fs::temp_directory_path() / ("synclab-unit-" + name);
  fs::remove_all(p);
  return p;
}

}  // namespace

TEST_CASE("schema errors carry a JSON pointer") {
  json doc = phase_doc();
  doc["integrator"]["dt"] = "fast";
  try {
    parse_scenario(doc);
    FAIL("expected a schema error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::Schema);
    CHECK(std::string(e.what()).find("/integrator/dt") != std::string::npos);
  }
  doc = phase_doc();
  doc["initial"]["colour"] = 1;
  CHECK_THROWS_AS(build_config(parse_scenario(doc)), Error);
  doc = phase_doc();
  doc["invariants"]["names"][0] = "H[0,1,2,3]";
  CHECK_THROWS_AS(parse_scenario(doc), Error);
}

TEST_CASE("seeded random initial data is reproducible") {
  const auto a = std::get<PhaseConfig>(build_config(parse_scenario(phase_doc())));
  const auto b = std::get<PhaseConfig>(build_config(parse_scenario(phase_doc())));
  CHECK(a.theta() == b.theta());
  const auto c = std::get<PhaseConfig>(build_config(parse_scenario(phase_doc(), {std::uint64_t{4}, {}})));
  CHECK(a.theta() != c.theta());
}

TEST_CASE("input hash ignores formatting and key order") {
  json doc = phase_doc();
  json reordered = json::parse(doc.dump());
  reordered["integrator"]["T_final"] = 1;  // integer spelling of 1.0
  reordered["description"] = "comments do not change the hash";
  CHECK(canonical_input(parse_scenario(doc)) == canonical_input(parse_scenario(reordered)));
  json other = phase_doc();
  other["initial"]["alpha"] = 0.25;
  CHECK(canonical_input(parse_scenario(doc)) != canonical_input(parse_scenario(other)));
}

TEST_CASE("T_final = 0 writes a single trajectory row") {
  json doc = phase_doc();
  doc["integrator"]["T_final"] = 0.0;
  const fs::path out = scratch("t0");
  const auto res = run_scenario(parse_scenario(doc), out.string());
  CHECK(res.exit_code == kExitOk);
  const std::string csv = slurp(out / "unit" / "trajectory.csv");
  size_t rows = 0;
  for (size_t p = csv.find("\r\n"); p != std::string::npos; p = csv.find("\r\n", p + 2)) ++rows;
  CHECK(rows == 2);  // header + initial state
  CHECK(csv.rfind("t,theta_0,", 0) == 0);
}

TEST_CASE("coarse step fails the drift verdict") {
  json doc = phase_doc();
  doc["integrator"]["dt"] = 0.5;
  doc["integrator"]["T_final"] = 5.0;
  const auto res = run_scenario(parse_scenario(doc), scratch("coarse").string());
  CHECK(res.exit_code == kExitVerdictFailed);
}

TEST_CASE("runs are byte-for-byte reproducible") {
  const fs::path a = scratch("rep-a"), b = scratch("rep-b");
  run_scenario(parse_scenario(phase_doc()), a.string());
  run_scenario(parse_scenario(phase_doc()), b.string());
  for (const char* f : {"trajectory.csv", "observables.csv", "drift.json", "drift.csv"})
    CHECK(slurp(a / "unit" / f) == slurp(b / "unit" / f));
  const json m = json::parse(slurp(a / "unit" / "manifest.json"));
  CHECK(m["scenario_id"] == "unit");
  CHECK(m["input_hash"].get<std::string>().size() == 40);
  CHECK(m["settings"]["rng"] == "mt19937_64");
}

TEST_CASE("CSV quoting") {
  CHECK(csv_field("plain") == "plain");
  CHECK(csv_field("a,b") == "\"a,b\"");
  CHECK(csv_field("say \"hi\"") == "\"say \"\"hi\"\"\"");
}

TEST_CASE("git blob hash") {
  // `printf 'hello\n' | git hash-object --stdin`
  CHECK(git_blob_sha1("hello\n") == "ce013625030ba8dba906f756967f9e9ca394464a");
}
