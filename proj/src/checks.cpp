#include "synclab/checks.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <numbers>

#include "synclab/dynamics.hpp"
#include "synclab/equilibria.hpp"
#include "synclab/error.hpp"
#include "synclab/generators.hpp"
#include "synclab/integrate.hpp"
#include "synclab/invariants.hpp"
#include "synclab/reduce_kuramoto.hpp"
#include "synclab/reduce_sphere.hpp"

namespace synclab {

namespace {

constexpr double kPi = std::numbers::pi;

// Shared protocol constants.
constexpr double kDt = 1e-3;
constexpr double kDriftTol = 1e-6;
constexpr double kCoarseDt = 0.04;  // halving pair for the drift-ratio test
constexpr double kRatioLo = 12.0;
constexpr double kRatioHi = 20.0;
constexpr double kMonotoneSlack = 1e-12;  // relative to the initial value

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}

IntegratorSettings rk4(double dt, Projection p = Projection::None, int record_every = 1) {
  IntegratorSettings st;
  st.scheme = Scheme::RK4;
  st.dt = dt;
  st.projection = p;
  st.record_every = record_every;
  return st;
}

std::vector<std::array<int, 4>> quadruples(int n) {
  std::vector<std::array<int, 4>> q;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int c = b + 1; c < n; ++c)
        for (int d = c + 1; d < n; ++d) q.push_back({a, b, c, d});
  return q;
}

std::string bracket(const std::string& base, const std::array<int, 4>& q) {
  return base + "[" + std::to_string(q[0]) + "," + std::to_string(q[1]) + "," + std::to_string(q[2]) + "," +
         std::to_string(q[3]) + "]";
}

double max_rel(const std::vector<DriftReport>& rs) {
  double m = 0.0;
  for (const auto& r : rs) m = std::max(m, r.max_rel_dev);
  return m;
}

double phase_drift(const PhaseConfig& cfg, const std::string& name, double dt, double t_final) {
  const auto tr = integrate(cfg, rk4(dt), t_final);
  return drift_report(cfg, tr, {name}, kDriftTol)[0].max_rel_dev;
}

// Criteria 1 and 2: drift at dt = 1e−3 and the coarse halving ratio.
void conservation_with_ratio(CheckResult& out, const PhaseConfig& cfg, const std::string& name,
                             const std::string& label) {
  out.metrics.push_back(less(label + " drift", phase_drift(cfg, name, kDt, 5.0), kDriftTol));
  const double coarse = phase_drift(cfg, name, kCoarseDt, 5.0);
  const double fine = phase_drift(cfg, name, kCoarseDt / 2, 5.0);
  out.metrics.push_back(within(label + " halving ratio", coarse / fine, kRatioLo, kRatioHi));
}

CheckResult criterion1(Rng& rng) {
  CheckResult r;
  const PhaseConfig cfg(random_phases(6, 0, 2 * kPi, rng), {}, 1.0, 0.0, Flavor::Cosine);
  conservation_with_ratio(r, cfg, "I", "I");
  return r;
}

CheckResult criterion2(Rng& rng) {
  CheckResult r;
  const Eigen::VectorXd th = random_phases(6, 0, 2 * kPi, rng);
  for (double alpha : {-0.4, 0.3, 1.2}) {
    const PhaseConfig cfg(th, {}, 1.0, alpha, Flavor::Cosine);
    conservation_with_ratio(r, cfg, "J", "J(alpha=" + fmt(alpha) + ")");
  }
  return r;
}

CheckResult criterion3(Rng& rng) {
  CheckResult r;
  const Eigen::VectorXd th = random_phases(6, 0, 2 * kPi, rng);
  std::vector<std::string> names;
  for (const auto& q : quadruples(6)) names.push_back(bracket("K", q));
  for (double alpha : {-kPi / 2, -0.4, 0.0, 0.3, 1.2, kPi / 2}) {
    const PhaseConfig cfg(th, {}, 1.0, alpha, Flavor::Cosine);
    const auto tr = integrate(cfg, rk4(kDt), 5.0);
    r.metrics.push_back(less("K drift (alpha=" + fmt(alpha) + ", 15 quadruples)",
                             max_rel(drift_report(cfg, tr, names, kDriftTol)), kDriftTol));
  }
  return r;
}

CheckResult criterion4(Rng& rng) {
  CheckResult r;
  const Eigen::VectorXd th1 = random_phases(6, 0.0, 0.9, rng);
  const auto b1 = dichotomy_check(th1, 0.5, 1.0, 60.0, 1e-3, rk4(kDt, Projection::None, 10));
  r.metrics.push_back(greater("branch 1 R(60)", b1.r_final, 0.999));
  r.metrics.push_back(holds("branch 1 precondition max|dtheta| < 2 alpha", b1.precondition));
  const Eigen::VectorXd th2 = random_phases(6, 0.0, 2 * kPi, rng);
  const auto b2 = dichotomy_check(th2, -0.5, 1.0, 200.0, 1e-3, rk4(kDt));
  r.metrics.push_back(less("branch 2 R(200)", b2.r_final, 1e-3));
  r.metrics.push_back(holds("branch 2 precondition distinct phases", b2.precondition));
  r.metrics.push_back(holds("branch 2 sum(theta) non-decreasing", b2.sum_theta_monotone));
  r.metrics.push_back(holds("branch 1 sum(theta) non-decreasing", b1.sum_theta_monotone));
  return r;
}

CheckResult criterion5(Rng& rng) {
  CheckResult r;
  double worst_err = 0.0, worst_cross = 0.0, worst_f = 0.0, worst_g = -1.0;
  bool bounds_ok = true;
  for (int n : {4, 6, 8})
    for (double alpha : {0.0, 0.4, kPi / 2}) {
      const PhaseConfig cfg(random_phases(n, 0, 2 * kPi, rng), {}, 1.0, alpha, Flavor::Sine);
      const auto data = project_phase_data(cfg);
      const auto full = integrate(cfg, rk4(kDt), 3.0);
      const auto fg = integrate_fg(data, rk4(kDt), 3.0);
      const auto err = reconstruct_and_compare(full, data, fg);
      const auto b = check_fg_bounds(data, fg);
      worst_err = std::max(worst_err, err.max_error);
      worst_cross = std::max(worst_cross, err.cross_ratio_error);
      worst_f = std::max(worst_f, b.worst_f);
      worst_g = std::max(worst_g, b.worst_g);
      bounds_ok = bounds_ok && b.ok;
    }
  r.metrics.push_back(less("reconstruction error (9 runs)", worst_err, 1e-5));
  r.metrics.push_back(holds("|f| <= e^(kt), |g| <= e^(kt)-1 within 1e-6", bounds_ok));
  r.metrics.push_back(less_eq("max |f| e^(-kt)", worst_f, 1.0 + 1e-6));
  r.metrics.push_back(less("affine cross-ratio identity", worst_cross, 1e-6));
  return r;
}

CheckResult criterion6(Rng& rng) {
  CheckResult r;
  std::vector<std::string> names;
  for (const auto& q : quadruples(6)) names.push_back(bracket("H", q));
  for (int d : {2, 3}) {
    const Eigen::MatrixXd x0 = concyclic_points(d + 1, 6, 4, rng);
    const Eigen::MatrixXd omega = 0.7 * random_skew(d + 1, rng);
    for (bool rotating : {false, true}) {
      std::vector<Eigen::MatrixXd> om;
      if (rotating) om.push_back(omega);
      const auto cfg = SphereConfig::make(x0, om, 1.0, 1.0, {});
      auto tr = integrate(cfg, rk4(kDt, Projection::Normalize), 5.0);
      const std::string tag = "d=" + std::to_string(d) + (rotating ? ", shared Omega" : ", Omega=0");
      r.metrics.push_back(less("H drift (" + tag + ")", max_rel(drift_report(cfg, tr, names, kDriftTol)), kDriftTol));
      double worst = 0.0;
      for (const auto& x : tr.states) worst = std::max(worst, std::abs(ptolemy_residual(x, 0, 1, 2, 3)));
      r.metrics.push_back(less("Ptolemy residual (" + tag + ")", worst, 1e-6));
    }
  }
  return r;
}

double worst_monotone_step(const SphereConfig& cfg, const std::string& name) {
  const auto tr = integrate(cfg, rk4(kDt, Projection::Normalize), 5.0);
  return drift_report(cfg, tr, {name}, kMonotoneSlack)[0].max_rel_dev;
}

CheckResult criterion7(Rng& rng) {
  CheckResult r;
  const Eigen::MatrixXd x0 = random_sphere_points(3, 6, rng);
  const auto attract = SphereConfig::make(x0, {}, 1.0, 1.0, {});
  const auto repel = SphereConfig::make(x0, {}, -1.0, 1.0, {});
  r.metrics.push_back(less_eq("D_M increase, kappa=+1", worst_monotone_step(attract, "D_M"), kMonotoneSlack));
  r.metrics.push_back(less_eq("D_M decrease, kappa=-1", worst_monotone_step(repel, "D_M"), kMonotoneSlack));
  // V = (I + W)/‖I + W‖_op
  const Eigen::MatrixXd w = 0.5 * random_skew(3, rng);
  const Eigen::MatrixXd v = Eigen::MatrixXd::Identity(3, 3) + w;
  const double s = op_norm(v);
  const auto frustrated = SphereConfig::make(x0, {}, 1.0, 1.0 / s, w / s);
  r.metrics.push_back(less_eq("rho^2 decrease, normalized V", worst_monotone_step(frustrated, "rho2"), kMonotoneSlack));
  return r;
}

CheckResult criterion8(Rng& rng) {
  CheckResult r;
  const auto cfg = SphereConfig::make(random_sphere_points(3, 5, rng), {}, 1.0, 1.0, {});
  const auto data = project_sphere_data(cfg);
  const auto st = rk4(kDt);
  const auto full = project_sphere_trajectory(integrate(cfg, rk4(kDt, Projection::Normalize), 3.0));
  const auto stereo = integrate_stereo_full(data, st, 3.0);
  const auto abm = integrate_abM(data, st, 3.0);
  const auto recon = reconstruct_abM(abm, data);
  r.metrics.push_back(less("full vs stereographic", max_discrepancy(full, stereo), 1e-4));
  r.metrics.push_back(less("stereographic vs (a,b,M)", max_discrepancy(stereo, recon), 1e-4));
  r.metrics.push_back(less("full vs (a,b,M)", max_discrepancy(full, recon), 1e-4));
  const auto diag = diagnose_abM(abm, stereo, data);
  r.metrics.push_back(less("|M^T M - I|_F", diag.max_orthogonality_defect, 1e-8));
  r.metrics.push_back(greater("min a(t)", diag.min_a, 0.0));
  r.metrics.push_back(less("inner-product law", diag.inner_product_law, 1e-5));
  r.metrics.push_back(less("eight-index identity", diag.eight_index_identity, 1e-5));
  r.metrics.push_back(less("rho^2 from (a,b)", diag.rho2_mismatch, 1e-8));
  return r;
}

CheckResult criterion9(Rng& rng) {
  CheckResult r;
  const Eigen::MatrixXd x0 = random_cap_points(3, 6, 0.5, rng);
  const Eigen::MatrixXd omega = 0.5 * random_skew(3, rng);
  struct Case {
    const char* tag;
    double w_norm;
  };
  for (const Case c : {Case{"W=0", 0.0}, Case{"|W|_op=0.1", 0.1}}) {
    const Eigen::MatrixXd w = skew_with_op_norm(3, c.w_norm, rng);
    const auto cfg = SphereConfig::make(x0, {omega}, 1.0, 1.0, w);
    const auto res = sphere_aggregation_check(cfg, 30.0, rk4(kDt, Projection::Normalize, 10));
    const std::string tag = c.tag;
    r.metrics.push_back(holds("hypothesis holds (" + tag + ")", res.hypothesis));
    r.metrics.push_back(less("max distance at T=30 (" + tag + ")", res.final_max_distance, 1e-4));
    r.metrics.push_back(greater_eq("fitted rate / predicted (" + tag + ")", res.fitted_rate / res.predicted_rate, 0.5));
  }
  return r;
}

CheckResult criterion10(Rng& rng) {
  CheckResult r;
  const Eigen::MatrixXd w = random_skew(3, rng);
  {
    const auto cfg = SphereConfig::make(random_sphere_points(3, 2, rng), {}, 1.0, 0.0, w);
    const auto tr = integrate(cfg, rk4(kDt, Projection::Normalize), 20.0);
    const auto rep = drift_report(cfg, tr, {"inner[0,1]"}, kDriftTol)[0];
    r.metrics.push_back(less("<x1,x2> deviation (N=2)", rep.max_abs_dev, 1e-8));
  }
  const auto cfg = SphereConfig::make(random_sphere_points(3, 5, rng), {}, 1.0, 0.0, w);
  const auto tr = integrate(cfg, rk4(kDt, Projection::Normalize), 20.0);
  r.metrics.push_back(less("product drift (N=5)", drift_report(cfg, tr, {"skew_product"}, kDriftTol)[0].max_rel_dev, kDriftTol));
  double closest = std::numeric_limits<double>::infinity();
  for (const auto& x : tr.states)
    for (int i = 0; i < 5; ++i)
      for (int j = i + 1; j < 5; ++j) closest = std::min(closest, (x.col(i) - x.col(j)).norm());
  r.metrics.push_back(greater("closest approach", closest, 1e-3));
  return r;
}

void matrix_run(CheckResult& r, const UnitaryConfig& cfg, const std::string& tag) {
  const auto res = matrix_aggregation_check(cfg, 40.0, rk4(kDt, Projection::Polar, 10), 1e-3);
  r.metrics.push_back(holds("hypothesis holds (" + tag + ")", res.hypothesis));
  r.metrics.push_back(less("D(U) at T=40 (" + tag + ")", res.d_final, 1e-4));
  r.metrics.push_back(less_eq("Riccati excess (" + tag + ")", res.worst_riccati_excess, 1e-3));
}

CheckResult criterion11(Rng& rng) {
  CheckResult r;
  const Eigen::MatrixXcd h = 0.5 * random_hermitian(2, rng);
  const auto id = Eigen::MatrixXcd::Identity(2, 2);
  matrix_run(r, UnitaryConfig::make(unitary_cluster(5, 2, 1.2, rng), {h}, 1.0, id), "V=I, D0=1.2");
  const Eigen::MatrixXcd v = unitary_with_defect(2, 0.3, rng);
  matrix_run(r, UnitaryConfig::make(unitary_cluster(5, 2, 1.0, rng), {h}, 1.0, v), "|V-I|_F=0.3, D0=1.0");
  return r;
}

CheckResult criterion12(Rng& rng) {
  CheckResult r;
  const auto cfg = UnitaryConfig::make(haar_unitaries(5, 2, rng), {}, 1.0, Eigen::MatrixXcd::Identity(2, 2));
  const auto tr = integrate(cfg, rk4(kDt, Projection::Polar), 3.0);
  std::vector<std::string> names;
  for (const auto& q : quadruples(5)) names.push_back(bracket("spectrum", q));
  double worst = 0.0;
  for (const auto& rep : drift_report(cfg, tr, names, 1e-5)) worst = std::max(worst, rep.max_abs_dev);
  r.metrics.push_back(less("sorted eigenvalue drift (5 quadruples)", worst, 1e-5));
  return r;
}

double max_block_move(const Eigen::MatrixXcd& u0, const Eigen::MatrixXcd& u1) {
  const Eigen::Index d = u0.rows();
  double m = 0.0;
  for (Eigen::Index j = 0; j < u0.cols() / d; ++j)
    m = std::max(m, (u0.middleCols(j * d, d) - u1.middleCols(j * d, d)).norm());
  return m;
}

CheckResult criterion13(Rng& rng) {
  CheckResult r;
  double res = 0.0, move = 0.0, hom = 0.0, sum = 0.0;
  auto probe = [&](const FiniteGroupRep& rep, const Eigen::MatrixXcd& v) {
    const auto cfg = rep_configuration(rep, v);
    res = std::max(res, is_equilibrium(cfg).residual);
    const auto tr = integrate(cfg, rk4(kDt, Projection::Polar, 1000), 10.0);
    for (const auto& u : tr.states) move = std::max(move, max_block_move(cfg.u(), u));
    hom = std::max({hom, homomorphism_residual(rep), rep_unitarity_residual(rep)});
    if (rep.size() > 1) sum = std::max(sum, rep_sum_norm(rep));
  };
  for (int n : {3, 4, 5}) probe(cyclic_rep(n), Eigen::MatrixXcd::Identity(1, 1));
  double diam = 0.0;
  for (int n : {3, 4}) {
    const auto rep = symmetric_standard_rep(n);
    probe(rep, random_unitary(n - 1, rng));
    diam = std::max(diam, std::abs(matrix_diameter(rep_configuration(rep, {}).u()) - std::sqrt(2.0 * n)));
  }
  r.metrics.push_back(less("equilibrium residual", res, 1e-10));
  r.metrics.push_back(less("|D - sqrt(2n)|", diam, 1e-10));
  r.metrics.push_back(less("max move over T=10", move, 1e-6));
  r.metrics.push_back(less("homomorphism/unitarity residual", hom, 1e-12));
  r.metrics.push_back(less("|sum rho(g)|", sum, 1e-12));
  return r;
}

CheckResult criterion14(Rng& rng) {
  CheckResult r;
  int worst = 0;
  for (int run = 0; run < 20; ++run) {
    const Eigen::MatrixXd omega = random_skew(3, rng);
    const auto cfg = SphereConfig::make(random_sphere_points(3, 8, rng), {omega}, 1.0, 1.0, {});
    const auto tr = integrate(cfg, rk4(kDt, Projection::Normalize, 50000), 50.0);
    const Eigen::MatrixXd& x = tr.states.back();
    const Eigen::VectorXd pole = x.rowwise().mean().normalized();
    int north = 0;
    for (int i = 0; i < 8; ++i) north += x.col(i).dot(pole) >= 0.0 ? 1 : 0;
    worst = std::max(worst, std::min(north, 8 - north));
  }
  r.metrics.push_back(less_eq("max over 20 runs of min(|N|,|S|)", worst, 1));
  return r;
}

}  // namespace

bool Metric::passed() const {
  switch (op) {
    case Op::Less: return value < a;
    case Op::LessEq: return value <= a;
    case Op::Greater: return value > a;
    case Op::GreaterEq: return value >= a;
    case Op::Within: return value >= a && value <= b;
  }
  return false;
}

namespace {

std::string limit_text(const Metric& m) {
  switch (m.op) {
    case Metric::Op::Less: return "< " + fmt(m.a);
    case Metric::Op::LessEq: return "<= " + fmt(m.a);
    case Metric::Op::Greater: return "> " + fmt(m.a);
    case Metric::Op::GreaterEq: return ">= " + fmt(m.a);
    case Metric::Op::Within: return "in [" + fmt(m.a) + ", " + fmt(m.b) + "]";
  }
  return "";
}

}  // namespace

std::string Metric::describe() const { return name + " = " + fmt(value) + " (" + limit_text(*this) + ")"; }

Metric less(std::string name, double value, double limit) { return {std::move(name), value, Metric::Op::Less, limit, 0}; }
Metric less_eq(std::string name, double value, double limit) { return {std::move(name), value, Metric::Op::LessEq, limit, 0}; }
Metric greater(std::string name, double value, double limit) { return {std::move(name), value, Metric::Op::Greater, limit, 0}; }
Metric greater_eq(std::string name, double value, double limit) {
  return {std::move(name), value, Metric::Op::GreaterEq, limit, 0};
}
Metric within(std::string name, double value, double lo, double hi) {
  return {std::move(name), value, Metric::Op::Within, lo, hi};
}
Metric holds(std::string name, bool ok) { return {std::move(name), ok ? 1.0 : 0.0, Metric::Op::Within, 1.0, 1.0}; }

bool CheckResult::passed() const {
  if (!error.empty() || metrics.empty()) return false;
  return std::all_of(metrics.begin(), metrics.end(), [](const Metric& m) { return m.passed(); });
}

std::string CheckResult::summary() const {
  if (!error.empty()) return "error: " + error;
  std::string out;
  for (const auto& m : metrics)
    if (!m.passed()) out += (out.empty() ? "" : "; ") + std::string("FAILED ") + m.describe();
  for (const auto& m : metrics)
    if (m.passed()) out += (out.empty() ? "" : "; ") + m.describe();
  return out;
}

std::string criterion_title(int id) {
  static const char* titles[] = {"",
                                 "conservation of I",
                                 "conservation of J_alpha",
                                 "conservation of K_abcd",
                                 "synchrony/incoherence dichotomy",
                                 "Kuramoto (f,g) reduction",
                                 "conservation of H_abcd and Ptolemy",
                                 "monotone D_M and rho^2",
                                 "sphere reduction chain",
                                 "sphere aggregation",
                                 "skew-frustration conservation",
                                 "matrix aggregation",
                                 "matrix cross-ratio spectra",
                                 "group-representation equilibria",
                                 "pole-count constraint"};
  if (id < 1 || id > kCriterionCount) throw Error(ErrorCode::InvalidArgument, "criterion id out of range");
  return titles[id];
}

CheckResult run_criterion(int id, std::uint64_t seed) {
  using Fn = CheckResult (*)(Rng&);
  static const Fn fns[] = {nullptr,      criterion1,  criterion2,  criterion3,  criterion4,
                           criterion5,   criterion6,  criterion7,  criterion8,  criterion9,
                           criterion10,  criterion11, criterion12, criterion13, criterion14};
  const std::string title = criterion_title(id);
  Rng rng(seed + static_cast<std::uint64_t>(id));
  const auto start = std::chrono::steady_clock::now();
  CheckResult r;
  try {
    r = fns[id](rng);
  } catch (const std::exception& e) {
    r.error = e.what();
  }
  r.id = id;
  r.title = title;
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"kuramoto-invariants", "sphere-invariants", "matrix",
                                                 "reductions", "equilibria", "all"};
  return names;
}

std::vector<int> suite_criteria(const std::string& name) {
  if (name == "kuramoto-invariants") return {1, 2, 3, 4};
  if (name == "sphere-invariants") return {6, 7, 9, 10, 14};
  if (name == "matrix") return {11, 12};
  if (name == "reductions") return {5, 8};
  if (name == "equilibria") return {13};
  if (name == "all") {
    std::vector<int> all;
    for (int i = 1; i <= kCriterionCount; ++i) all.push_back(i);
    return all;
  }
  throw Error(ErrorCode::InvalidArgument, "unknown suite '" + name + "'");
}

std::string summary_table(const std::vector<CheckResult>& results) {
  std::string out;
  char line[256];
  std::snprintf(line, sizeof line, "%-3s %-40s %-6s %8s\n", "#", "check", "result", "seconds");
  out += line;
  out += std::string(60, '-') + "\n";
  for (const auto& r : results) {
    std::snprintf(line, sizeof line, "%-3d %-40s %-6s %8.2f\n", r.id, r.title.c_str(), r.passed() ? "PASS" : "FAIL",
                  r.seconds);
    out += line;
  }
  return out;
}

json summary_json(const std::string& suite, std::uint64_t seed, const std::vector<CheckResult>& results) {
  json rows = json::array();
  int passed = 0;
  for (const auto& r : results) {
    json metrics = json::array();
    for (const auto& m : r.metrics)
      metrics.push_back({{"name", m.name}, {"value", std::isfinite(m.value) ? json(m.value) : json(nullptr)},
                         {"passed", m.passed()}, {"limit", limit_text(m)}});
    json row = {{"id", r.id}, {"title", r.title}, {"passed", r.passed()}, {"seconds", r.seconds}, {"metrics", metrics}};
    if (!r.error.empty()) row["error"] = r.error;
    rows.push_back(std::move(row));
    passed += r.passed() ? 1 : 0;
  }
  return {{"suite", suite},
          {"seed", seed},
          {"total", static_cast<int>(results.size())},
          {"passed", passed},
          {"failed", static_cast<int>(results.size()) - passed},
          {"all_passed", passed == static_cast<int>(results.size())},
          {"results", rows}};
}

}  // namespace synclab
