#include "synclab/runner.hpp"

#include <chrono>
#include <filesystem>
#include <fstream>

#include "synclab/error.hpp"

namespace synclab {

namespace fs = std::filesystem;

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

namespace {

constexpr const char* kEol = "\r\n";

std::vector<std::string> state_columns(const Eigen::VectorXd& th) {
  std::vector<std::string> c;
  for (Eigen::Index i = 0; i < th.size(); ++i) c.push_back("theta_" + std::to_string(i));
  return c;
}

std::vector<std::string> state_columns(const Eigen::MatrixXd& x) {
  std::vector<std::string> c;
  for (Eigen::Index j = 0; j < x.cols(); ++j)
    for (Eigen::Index k = 0; k < x.rows(); ++k) c.push_back("x" + std::to_string(j) + "_" + std::to_string(k));
  return c;
}

std::vector<std::string> state_columns(const Eigen::MatrixXcd& u) {
  std::vector<std::string> c;
  const Eigen::Index d = u.rows();
  for (Eigen::Index j = 0; j < u.cols() / d; ++j)
    for (Eigen::Index r = 0; r < d; ++r)
      for (Eigen::Index s = 0; s < d; ++s) {
        const std::string base = "U" + std::to_string(j) + "_" + std::to_string(r) + "_" + std::to_string(s);
        c.push_back(base + "_re");
        c.push_back(base + "_im");
      }
  return c;
}

void append_state(std::string& line, const Eigen::VectorXd& th) {
  for (Eigen::Index i = 0; i < th.size(); ++i) line += "," + format_double(th(i));
}

void append_state(std::string& line, const Eigen::MatrixXd& x) {
  for (Eigen::Index j = 0; j < x.cols(); ++j)
    for (Eigen::Index k = 0; k < x.rows(); ++k) line += "," + format_double(x(k, j));
}

void append_state(std::string& line, const Eigen::MatrixXcd& u) {
  const Eigen::Index d = u.rows();
  for (Eigen::Index j = 0; j < u.cols() / d; ++j)
    for (Eigen::Index r = 0; r < d; ++r)
      for (Eigen::Index s = 0; s < d; ++s) {
        const cplx z = u(r, j * d + s);
        line += "," + format_double(z.real()) + "," + format_double(z.imag());
      }
}

void write_file(const fs::path& p, const std::string& content) {
  std::ofstream out(p, std::ios::binary);
  if (!out) throw Error(ErrorCode::Io, "cannot write '" + p.string() + "'");
  out << content;
  if (!out) throw Error(ErrorCode::Io, "write failed for '" + p.string() + "'");
}

template <class S>
std::string trajectory_csv(const Trajectory<S>& tr) {
  std::string out = "t";
  for (const auto& c : state_columns(tr.states.front())) out += "," + c;
  out += kEol;
  for (size_t i = 0; i < tr.size(); ++i) {
    std::string line = format_double(tr.times[i]);
    append_state(line, tr.states[i]);
    out += line + kEol;
  }
  return out;
}

template <class S>
std::string observables_csv(const Trajectory<S>& tr) {
  std::string out = "t";
  for (const auto& [name, _] : tr.observables) out += "," + csv_field(name);
  out += kEol;
  for (size_t i = 0; i < tr.size(); ++i) {
    out += format_double(tr.times[i]);
    for (const auto& [_, series] : tr.observables) out += "," + format_double(series[i]);
    out += kEol;
  }
  return out;
}

template <class S>
std::string observables_dat(const Trajectory<S>& tr) {
  std::string out = "# t";
  for (const auto& [name, _] : tr.observables) out += " " + name;
  out += "\n";
  for (size_t i = 0; i < tr.size(); ++i) {
    out += format_double(tr.times[i]);
    for (const auto& [_, series] : tr.observables) out += " " + format_double(series[i]);
    out += "\n";
  }
  return out;
}

template <class C>
void check_config(const C& cfg) {
  const auto v = validate(cfg);
  if (v.empty()) return;
  std::string msg = "initial configuration invalid: ";
  for (size_t i = 0; i < v.size(); ++i) msg += (i ? "; " : "") + v[i].describe();
  throw Error(ErrorCode::Schema, "at /initial: " + msg);
}

template <class C>
RunResult run_model(const C& cfg, const ScenarioSpec& spec, const fs::path& dir) {
  check_config(cfg);
  auto tr = integrate(cfg, spec.settings, spec.t_final);
  record_observables(cfg, tr, spec.observables);
  RunResult res;
  if (!spec.invariants.empty()) {
    if (tr.size() < 2 && spec.t_final > 0)
      throw Error(ErrorCode::IntegratorFailure, "drift report needs at least two records");
    res.reports = drift_report(cfg, tr, spec.invariants, spec.tolerance);
  }
  auto emit = [&](const std::string& name, const std::string& content) {
    write_file(dir / name, content);
    res.outputs.push_back((fs::path(spec.out_dir) / name).generic_string());
  };
  emit("trajectory.csv", trajectory_csv(tr));
  emit("observables.csv", observables_csv(tr));
  if (spec.dat_mirrors) emit("observables.dat", observables_dat(tr));
  emit("drift.json", to_json(res.reports).dump(2) + "\n");
  emit("drift.csv", drift_reports_csv(res.reports));
  for (const auto& r : res.reports)
    if (!r.pass) res.exit_code = kExitVerdictFailed;
  return res;
}

}  // namespace

RunResult run_scenario(const ScenarioSpec& spec, const std::string& out_root) {
  const auto start = std::chrono::steady_clock::now();
  const fs::path dir = fs::path(out_root) / spec.out_dir;
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw Error(ErrorCode::Io, "cannot create '" + dir.string() + "': " + ec.message());
  const ModelConfig cfg = build_config(spec);
  RunResult res = std::visit([&](const auto& c) { return run_model(c, spec, dir); }, cfg);
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  res.outputs.push_back((fs::path(spec.out_dir) / "manifest.json").generic_string());
  res.manifest = {{"scenario_id", spec.id},
                  {"settings", resolved_settings(spec)},
                  {"input_hash", git_blob_sha1(canonical_input(spec))},
                  {"outputs", res.outputs},
                  {"wall_clock_seconds", secs},
                  {"exit_code", res.exit_code}};
  write_file(dir / "manifest.json", res.manifest.dump(2) + "\n");
  return res;
}

}  // namespace synclab
