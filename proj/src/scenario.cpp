#include "synclab/scenario.hpp"

#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>

#include "synclab/equilibria.hpp"
#include "synclab/error.hpp"
#include "synclab/generators.hpp"
#include "synclab/invariants.hpp"

namespace synclab {

const char* to_string(ModelKind m) {
  switch (m) {
    case ModelKind::Phase: return "phase";
    case ModelKind::Sphere: return "sphere";
    case ModelKind::Unitary: return "unitary";
  }
  return "phase";
}

namespace {

[[noreturn]] void fail(const std::string& ptr, const std::string& what) {
  throw Error(ErrorCode::Schema, "at " + ptr + ": " + what);
}

const json& require(const json& obj, const std::string& key, const std::string& ptr) {
  if (!obj.is_object()) fail(ptr, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) fail(ptr, "missing required key '" + key + "'");
  return *it;
}

std::string string_at(const json& j, const std::string& ptr) {
  if (!j.is_string()) fail(ptr, "expected a string");
  return j.get<std::string>();
}

int int_at(const json& j, const std::string& ptr, int lo) {
  if (!j.is_number_integer()) fail(ptr, "expected an integer");
  const auto v = j.get<long long>();
  if (v < lo || v > 1000000) fail(ptr, "integer out of range");
  return static_cast<int>(v);
}

double opt_number(const json& obj, const std::string& key, const std::string& ptr, double dflt) {
  auto it = obj.find(key);
  return it == obj.end() ? dflt : number_at(*it, ptr + "/" + key);
}

void check_keys(const json& obj, const std::string& ptr, std::initializer_list<const char*> allowed) {
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    bool ok = false;
    for (const char* a : allowed) ok = ok || it.key() == a;
    if (!ok) fail(ptr, "unknown key '" + it.key() + "'");
  }
}

}  // namespace

ScenarioSpec parse_scenario(const json& doc_in, const ScenarioOverrides& ov) {
  json doc = doc_in;
  if (!doc.is_object()) fail("/", "scenario must be a JSON object");
  check_keys(doc, "", {"id", "model", "seed", "initial", "integrator", "observables", "invariants", "outputs",
                       "description"});
  if (ov.seed) doc["seed"] = *ov.seed;
  if (ov.dt) {
    if (!doc.contains("integrator") || !doc["integrator"].is_object()) fail("/integrator", "missing integrator");
    doc["integrator"]["dt"] = *ov.dt;
  }
  ScenarioSpec s;
  s.id = string_at(require(doc, "id", ""), "/id");
  if (s.id.empty() || s.id.find_first_of("/\\") != std::string::npos) fail("/id", "id must be a plain name");
  const std::string model = string_at(require(doc, "model", ""), "/model");
  if (model == "phase") s.model = ModelKind::Phase;
  else if (model == "sphere") s.model = ModelKind::Sphere;
  else if (model == "unitary") s.model = ModelKind::Unitary;
  else fail("/model", "expected one of phase, sphere, unitary");
  if (doc.contains("seed")) {
    if (!doc["seed"].is_number_unsigned()) fail("/seed", "expected an unsigned integer");
    s.seed = doc["seed"].get<std::uint64_t>();
  }
  s.initial = require(doc, "initial", "");
  if (!s.initial.is_object()) fail("/initial", "expected an object");

  const json& integ = require(doc, "integrator", "");
  if (!integ.is_object()) fail("/integrator", "expected an object");
  check_keys(integ, "/integrator", {"scheme", "dt", "T_final", "projection", "record_every", "rtol", "atol", "adaptive"});
  if (integ.contains("scheme")) {
    try {
      s.settings.scheme = parse_scheme(string_at(integ["scheme"], "/integrator/scheme"));
    } catch (const Error& e) {
      if (e.code() == ErrorCode::Schema) throw;
      fail("/integrator/scheme", "expected RK4 or DOPRI5");
    }
  }
  s.settings.dt = opt_number(integ, "dt", "/integrator", 1e-3);
  if (!(s.settings.dt > 0)) fail("/integrator/dt", "dt must be > 0");
  s.t_final = number_at(require(integ, "T_final", "/integrator"), "/integrator/T_final");
  if (!(s.t_final >= 0)) fail("/integrator/T_final", "T_final must be >= 0");
  s.settings.rtol = opt_number(integ, "rtol", "/integrator", 1e-9);
  s.settings.atol = opt_number(integ, "atol", "/integrator", 1e-12);
  if (integ.contains("adaptive")) {
    if (!integ["adaptive"].is_boolean()) fail("/integrator/adaptive", "expected a boolean");
    s.settings.adaptive = integ["adaptive"].get<bool>();
  }
  if (integ.contains("record_every")) s.settings.record_every = int_at(integ["record_every"], "/integrator/record_every", 1);
  s.settings.projection = s.model == ModelKind::Phase    ? Projection::None
                          : s.model == ModelKind::Sphere ? Projection::Normalize
                                                         : Projection::Polar;
  if (integ.contains("projection")) {
    try {
      s.settings.projection = parse_projection(string_at(integ["projection"], "/integrator/projection"));
    } catch (const Error& e) {
      if (e.code() == ErrorCode::Schema) throw;
      fail("/integrator/projection", "expected None, Normalize or Polar");
    }
  }
  try {
    s.settings.check();
  } catch (const Error& e) {
    fail("/integrator", e.what());
  }

  auto names = [&](const json& arr, const std::string& ptr) {
    if (!arr.is_array()) fail(ptr, "expected an array of functional names");
    std::vector<std::string> out;
    for (size_t i = 0; i < arr.size(); ++i) {
      const std::string p = ptr + "/" + std::to_string(i);
      std::string n = string_at(arr[i], p);
      if (!is_known_functional(model, n)) fail(p, "unknown " + model + " functional '" + n + "'");
      out.push_back(std::move(n));
    }
    return out;
  };
  if (doc.contains("observables")) s.observables = names(doc["observables"], "/observables");
  if (doc.contains("invariants")) {
    const json& inv = doc["invariants"];
    if (!inv.is_object()) fail("/invariants", "expected an object");
    check_keys(inv, "/invariants", {"names", "tolerance"});
    s.invariants = names(require(inv, "names", "/invariants"), "/invariants/names");
    s.tolerance = opt_number(inv, "tolerance", "/invariants", 1e-6);
    if (!(s.tolerance > 0)) fail("/invariants/tolerance", "tolerance must be > 0");
  }
  s.out_dir = s.id;
  if (doc.contains("outputs")) {
    const json& o = doc["outputs"];
    if (!o.is_object()) fail("/outputs", "expected an object");
    check_keys(o, "/outputs", {"dir", "dat"});
    if (o.contains("dir")) s.out_dir = string_at(o["dir"], "/outputs/dir");
    if (o.contains("dat")) {
      if (!o["dat"].is_boolean()) fail("/outputs/dat", "expected a boolean");
      s.dat_mirrors = o["dat"].get<bool>();
    }
  }
  s.source = std::move(doc);
  return s;
}

ScenarioSpec load_scenario(const std::string& path, const ScenarioOverrides& ov) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::Io, "cannot read scenario '" + path + "'");
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::Schema, "at /: invalid JSON: " + std::string(e.what()));
  }
  return parse_scenario(doc, ov);
}

namespace {

bool is_random(const json& j) { return j.is_object() && (j.contains("random") || j.contains("rep")); }

Eigen::VectorXd build_phases(const json& j, const std::string& ptr, Rng& rng) {
  if (!is_random(j)) return vector_from_json(j, ptr);
  check_keys(j, ptr, {"random", "n", "low", "high"});
  if (string_at(j["random"], ptr + "/random") != "uniform") fail(ptr + "/random", "expected 'uniform'");
  const int n = int_at(require(j, "n", ptr), ptr + "/n", 1);
  const double lo = opt_number(j, "low", ptr, 0.0);
  const double hi = opt_number(j, "high", ptr, 2 * std::numbers::pi);
  return random_phases(n, lo, hi, rng);
}

PhaseConfig build_phase(const json& init, Rng& rng) {
  check_keys(init, "/initial", {"theta", "nu", "kappa", "alpha", "flavor"});
  Eigen::VectorXd theta = build_phases(require(init, "theta", "/initial"), "/initial/theta", rng);
  if (theta.size() < 1) fail("/initial/theta", "need at least one oscillator");
  Eigen::VectorXd nu;
  if (init.contains("nu")) {
    const json& jn = init["nu"];
    if (jn.is_number()) {
      nu = Eigen::VectorXd::Constant(1, jn.get<double>());
    } else {
      nu = vector_from_json(jn, "/initial/nu");
      if (nu.size() != theta.size()) fail("/initial/nu", "length must match theta");
    }
  }
  const double kappa = opt_number(init, "kappa", "/initial", 1.0);
  const double alpha = opt_number(init, "alpha", "/initial", 0.0);
  Flavor flavor = Flavor::Sine;
  if (init.contains("flavor")) {
    const std::string f = string_at(init["flavor"], "/initial/flavor");
    if (f == "Sine") flavor = Flavor::Sine;
    else if (f == "Cosine") flavor = Flavor::Cosine;
    else fail("/initial/flavor", "expected Sine or Cosine");
  }
  return PhaseConfig(std::move(theta), std::move(nu), kappa, alpha, flavor);
}

Eigen::MatrixXd build_points(const json& j, const std::string& ptr, Rng& rng) {
  if (!is_random(j)) return real_matrix_from_json(j, ptr).transpose();  // one point per row in JSON
  const std::string kind = string_at(j["random"], ptr + "/random");
  const int n = int_at(require(j, "n", ptr), ptr + "/n", 1);
  const int dim = int_at(require(j, "dim", ptr), ptr + "/dim", 2);
  if (kind == "uniform") {
    check_keys(j, ptr, {"random", "n", "dim"});
    return random_sphere_points(dim, n, rng);
  }
  if (kind == "cap") {
    check_keys(j, ptr, {"random", "n", "dim", "max_angle"});
    return random_cap_points(dim, n, number_at(require(j, "max_angle", ptr), ptr + "/max_angle"), rng);
  }
  if (kind == "concyclic") {
    check_keys(j, ptr, {"random", "n", "dim", "on_circle"});
    const int k = j.contains("on_circle") ? int_at(j["on_circle"], ptr + "/on_circle", 0) : 4;
    if (dim < 3 || k > n) fail(ptr, "concyclic needs dim >= 3 and on_circle <= n");
    return concyclic_points(dim, n, k, rng);
  }
  if (kind == "affine") {
    check_keys(j, ptr, {"random", "n", "dim", "m"});
    const int m = j.contains("m") ? int_at(j["m"], ptr + "/m", 1) : 2;
    if (m + 1 > dim) fail(ptr + "/m", "need m + 1 <= dim");
    return affine_section_points(dim, n, m, rng);
  }
  fail(ptr + "/random", "expected uniform, cap, concyclic or affine");
}

Eigen::MatrixXd build_skew(const json& j, const std::string& ptr, int dim, Rng& rng) {
  if (!is_random(j)) {
    Eigen::MatrixXd m = real_matrix_from_json(j, ptr);
    if (m.rows() != dim || m.cols() != dim) fail(ptr, "matrix must be (d+1) x (d+1)");
    return m;
  }
  check_keys(j, ptr, {"random", "scale", "op_norm", "shared"});
  if (string_at(j["random"], ptr + "/random") != "skew") fail(ptr + "/random", "expected 'skew'");
  if (j.contains("op_norm")) return skew_with_op_norm(dim, number_at(j["op_norm"], ptr + "/op_norm"), rng);
  return opt_number(j, "scale", ptr, 1.0) * random_skew(dim, rng);
}

SphereConfig build_sphere(const json& init, Rng& rng) {
  check_keys(init, "/initial", {"x", "omega", "kappa", "a", "W"});
  Eigen::MatrixXd x = build_points(require(init, "x", "/initial"), "/initial/x", rng);
  const int dim = static_cast<int>(x.rows());
  const int n = static_cast<int>(x.cols());
  std::vector<Eigen::MatrixXd> omega;
  if (init.contains("omega")) {
    const json& jo = init["omega"];
    if (is_random(jo)) {
      const bool shared = !jo.contains("shared") || jo["shared"].get<bool>();
      for (int i = 0; i < (shared ? 1 : n); ++i) omega.push_back(build_skew(jo, "/initial/omega", dim, rng));
    } else if (jo.is_array() && !jo.empty() && jo[0].is_array() && !jo[0].empty() && jo[0][0].is_array()) {
      if (jo.size() != 1 && jo.size() != static_cast<size_t>(n)) fail("/initial/omega", "list must have 1 or N matrices");
      for (size_t i = 0; i < jo.size(); ++i)
        omega.push_back(build_skew(jo[i], "/initial/omega/" + std::to_string(i), dim, rng));
    } else {
      omega.push_back(build_skew(jo, "/initial/omega", dim, rng));
    }
  }
  Eigen::MatrixXd w;
  if (init.contains("W")) w = build_skew(init["W"], "/initial/W", dim, rng);
  return SphereConfig::make(std::move(x), std::move(omega), opt_number(init, "kappa", "/initial", 1.0),
                            opt_number(init, "a", "/initial", 1.0), std::move(w));
}

std::vector<Eigen::MatrixXcd> build_unitaries(const json& j, const std::string& ptr, Rng& rng) {
  if (j.is_array()) {
    std::vector<Eigen::MatrixXcd> u;
    for (size_t i = 0; i < j.size(); ++i) u.push_back(complex_matrix_from_json(j[i], ptr + "/" + std::to_string(i)));
    if (u.empty()) fail(ptr, "need at least one matrix");
    return u;
  }
  if (!is_random(j)) fail(ptr, "expected a list of matrices or a generator object");
  if (j.contains("rep")) {
    check_keys(j, ptr, {"rep", "order"});
    const std::string rep = string_at(j["rep"], ptr + "/rep");
    const int order = int_at(require(j, "order", ptr), ptr + "/order", 1);
    if (rep == "cyclic") return cyclic_rep(order).rho;
    if (rep == "symmetric") {
      if (order < 2 || order > 6) fail(ptr + "/order", "symmetric rep needs 2 <= order <= 6");
      return symmetric_standard_rep(order).rho;
    }
    fail(ptr + "/rep", "expected cyclic or symmetric");
  }
  const std::string kind = string_at(j["random"], ptr + "/random");
  const int n = int_at(require(j, "n", ptr), ptr + "/n", 1);
  const int d = int_at(require(j, "d", ptr), ptr + "/d", 1);
  if (kind == "haar") {
    check_keys(j, ptr, {"random", "n", "d"});
    return haar_unitaries(n, d, rng);
  }
  if (kind == "cluster") {
    check_keys(j, ptr, {"random", "n", "d", "diameter"});
    return unitary_cluster(n, d, number_at(require(j, "diameter", ptr), ptr + "/diameter"), rng);
  }
  fail(ptr + "/random", "expected haar or cluster");
}

Eigen::MatrixXcd build_hermitian(const json& j, const std::string& ptr, int d, Rng& rng) {
  if (!is_random(j)) {
    Eigen::MatrixXcd m = complex_matrix_from_json(j, ptr);
    if (m.rows() != d || m.cols() != d) fail(ptr, "matrix must be d x d");
    return m;
  }
  check_keys(j, ptr, {"random", "scale", "shared"});
  if (string_at(j["random"], ptr + "/random") != "hermitian") fail(ptr + "/random", "expected 'hermitian'");
  return opt_number(j, "scale", ptr, 1.0) * random_hermitian(d, rng);
}

UnitaryConfig build_unitary(const json& init, Rng& rng) {
  check_keys(init, "/initial", {"U", "H", "kappa", "V"});
  const auto u = build_unitaries(require(init, "U", "/initial"), "/initial/U", rng);
  const int d = static_cast<int>(u[0].rows());
  const int n = static_cast<int>(u.size());
  std::vector<Eigen::MatrixXcd> h;
  if (init.contains("H")) {
    const json& jh = init["H"];
    if (is_random(jh)) {
      const bool shared = !jh.contains("shared") || jh["shared"].get<bool>();
      for (int i = 0; i < (shared ? 1 : n); ++i) h.push_back(build_hermitian(jh, "/initial/H", d, rng));
    } else if (jh.is_array() && !jh.empty() && jh[0].is_array() && !jh[0].empty() && jh[0][0].is_array() &&
               !jh[0][0].empty() && jh[0][0][0].is_array()) {
      for (size_t i = 0; i < jh.size(); ++i) h.push_back(build_hermitian(jh[i], "/initial/H/" + std::to_string(i), d, rng));
    } else {
      h.push_back(build_hermitian(jh, "/initial/H", d, rng));
    }
  }
  Eigen::MatrixXcd v = Eigen::MatrixXcd::Identity(d, d);
  if (init.contains("V")) {
    const json& jv = init["V"];
    if (jv.is_string()) {
      if (jv.get<std::string>() != "identity") fail("/initial/V", "expected 'identity'");
    } else if (is_random(jv)) {
      check_keys(jv, "/initial/V", {"random", "defect"});
      const std::string kind = string_at(jv["random"], "/initial/V/random");
      if (kind == "haar") v = random_unitary(d, rng);
      else if (kind == "special") v = random_special_unitary(d, rng);
      else if (kind == "defect") v = unitary_with_defect(d, number_at(require(jv, "defect", "/initial/V"), "/initial/V/defect"), rng);
      else fail("/initial/V/random", "expected haar, special or defect");
    } else {
      v = complex_matrix_from_json(jv, "/initial/V");
    }
  }
  return UnitaryConfig::make(u, std::move(h), opt_number(init, "kappa", "/initial", 1.0), std::move(v));
}

}  // namespace

ModelConfig build_config(const ScenarioSpec& spec) {
  Rng rng(spec.seed);
  try {
    switch (spec.model) {
      case ModelKind::Phase: return build_phase(spec.initial, rng);
      case ModelKind::Sphere: return build_sphere(spec.initial, rng);
      case ModelKind::Unitary: return build_unitary(spec.initial, rng);
    }
  } catch (const json::exception& e) {
    throw Error(ErrorCode::Schema, std::string("at /initial: ") + e.what());
  } catch (const Error& e) {
    if (e.code() == ErrorCode::Schema) throw;
    throw Error(ErrorCode::Schema, std::string("at /initial: ") + e.what());
  }
  throw Error(ErrorCode::Schema, "at /model: unsupported model");
}

json resolved_settings(const ScenarioSpec& spec) {
  const auto& st = spec.settings;
  return {{"model", to_string(spec.model)},
          {"scheme", to_string(st.scheme)},
          {"dt", st.dt},
          {"T_final", spec.t_final},
          {"rtol", st.rtol},
          {"atol", st.atol},
          {"adaptive", st.adaptive},
          {"projection", to_string(st.projection)},
          {"record_every", st.record_every},
          {"tolerance", spec.tolerance},
          {"seed", spec.seed},
          {"rng", kRngName}};
}

namespace {

// 5 and 5.0 hash alike; integers beyond 2^53 keep their exact form.
json normalize_numbers(const json& j) {
  if (j.is_number_integer() || j.is_number_unsigned()) {
    const double d = j.get<double>();
    if (std::abs(d) < 9007199254740992.0) return d;
    return j;
  }
  if (j.is_array()) {
    json out = json::array();
    for (const auto& e : j) out.push_back(normalize_numbers(e));
    return out;
  }
  if (j.is_object()) {
    json out = json::object();
    for (auto it = j.begin(); it != j.end(); ++it) out[it.key()] = normalize_numbers(it.value());
    return out;
  }
  return j;
}

}  // namespace

std::string canonical_input(const ScenarioSpec& spec) {
  json doc = {{"id", spec.id},
              {"initial", normalize_numbers(spec.initial)},
              {"settings", normalize_numbers(resolved_settings(spec))},
              {"observables", spec.observables},
              {"invariants", spec.invariants},
              {"outputs", {{"dir", spec.out_dir}, {"dat", spec.dat_mirrors}}}};
  doc["settings"]["seed"] = spec.seed;
  return doc.dump();
}

}  // namespace synclab
