#include "synclab/invariants.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <sstream>
#include <type_traits>

#include "synclab/dynamics.hpp"
#include "synclab/error.hpp"

namespace synclab {

double functional_I(const Eigen::VectorXd& theta) {
  const Eigen::Index n = theta.size();
  double p = 1.0;
  for (Eigen::Index i = 0; i < n; ++i) p *= std::sin((theta((i + 1) % n) - theta(i)) / 2);
  return p;
}

double SignedLog::value() const { return sign == 0 ? 0.0 : sign * std::exp(log_abs); }

SignedLog log_J_alpha(const Eigen::VectorXd& theta, double alpha) {
  if (!(std::abs(alpha) < std::numbers::pi / 2 - 1e-9))
    throw Error(ErrorCode::InvalidArgument, "J_alpha needs |alpha| < pi/2");
  const Eigen::Index n = theta.size();
  SignedLog out{1, 0.0};
  for (Eigen::Index i = 0; i < n; ++i) {
    double s = std::sin((theta((i + 1) % n) - theta(i)) / 2);
    if (s == 0.0) return {0, -std::numeric_limits<double>::infinity()};
    if (s < 0) out.sign = -out.sign;
    out.log_abs += std::log(std::abs(s));
  }
  out.log_abs += std::tan(alpha) * theta.sum();
  return out;
}

double functional_J_alpha(const Eigen::VectorXd& theta, double alpha) {
  return log_J_alpha(theta, alpha).value();
}

namespace {

void check_indices(int n, std::initializer_list<int> idx, const char* what) {
  for (int i : idx)
    if (i < 0 || i >= n) throw Error(ErrorCode::InvalidArgument, std::string(what) + ": index out of range");
}

double half_sine(const Eigen::VectorXd& th, int a, int b) { return std::sin((th(a) - th(b)) / 2); }

double dist(const Eigen::MatrixXd& x, int a, int b) { return (x.col(a) - x.col(b)).norm(); }

}  // namespace

double cross_ratio_K(const Eigen::VectorXd& theta, int a, int b, int c, int d) {
  const int n = static_cast<int>(theta.size());
  if (n < 4) throw Error(ErrorCode::InvalidArgument, "cross ratio needs N >= 4");
  check_indices(n, {a, b, c, d}, "cross_ratio_K");
  const double den = half_sine(theta, a, c) * half_sine(theta, b, d);
  if (std::abs(den) < 1e-14) throw Error(ErrorCode::DegenerateDenominator, "|Δ_ac Δ_bd| < 1e-14");
  return half_sine(theta, a, b) * half_sine(theta, c, d) / den;
}

double sphere_cross_ratio_H(const Eigen::MatrixXd& x, int a, int b, int c, int d) {
  const int n = static_cast<int>(x.cols());
  if (n < 4) throw Error(ErrorCode::InvalidArgument, "cross ratio needs N >= 4");
  check_indices(n, {a, b, c, d}, "sphere_cross_ratio_H");
  const double den = dist(x, a, c) * dist(x, b, d);
  if (den < 1e-14) throw Error(ErrorCode::DegenerateDenominator, "‖x_a−x_c‖‖x_b−x_d‖ < 1e-14");
  return dist(x, a, b) * dist(x, c, d) / den;
}

double ptolemy_residual(const Eigen::MatrixXd& x, int a, int b, int c, int d) {
  check_indices(static_cast<int>(x.cols()), {a, b, c, d}, "ptolemy_residual");
  return dist(x, a, b) * dist(x, c, d) + dist(x, b, c) * dist(x, a, d) - dist(x, a, c) * dist(x, b, d);
}

OrderParameter order_parameter_R(const Eigen::VectorXd& theta) {
  cplx z(0.0, 0.0);
  for (Eigen::Index k = 0; k < theta.size(); ++k) z += std::polar(1.0, theta(k));
  z /= static_cast<double>(theta.size());
  const double r = std::min(std::abs(z), 1.0);
  return {r, r < 1e-14 ? 0.0 : std::arg(z)};
}

double sphere_order_parameter(const Eigen::MatrixXd& x) { return x.rowwise().mean().norm(); }

double phase_diameter(const Eigen::VectorXd& theta) { return theta.maxCoeff() - theta.minCoeff(); }

double sphere_diameter(const Eigen::MatrixXd& x) {
  double s = 0.0;
  for (Eigen::Index i = 0; i < x.cols(); ++i)
    for (Eigen::Index j = i + 1; j < x.cols(); ++j) s += (x.col(i) - x.col(j)).squaredNorm();
  return 2.0 * s;
}

double sphere_max_distance(const Eigen::MatrixXd& x) {
  double m = 0.0;
  for (Eigen::Index i = 0; i < x.cols(); ++i)
    for (Eigen::Index j = i + 1; j < x.cols(); ++j) m = std::max(m, (x.col(i) - x.col(j)).norm());
  return m;
}

double sphere_diameter_A(const Eigen::MatrixXd& x) {
  // 1 − ⟨x_i, x_j⟩ = ‖x_i − x_j‖²/2 on the sphere; the chord form keeps precision near 0.
  double m = 0.0;
  for (Eigen::Index i = 0; i < x.cols(); ++i)
    for (Eigen::Index j = i + 1; j < x.cols(); ++j) m = std::max(m, 0.5 * (x.col(i) - x.col(j)).squaredNorm());
  return m;
}

double matrix_diameter(const Eigen::MatrixXcd& u) {
  const Eigen::Index d = u.rows();
  const Eigen::Index n = u.cols() / d;
  double m = 0.0;
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = i + 1; j < n; ++j)
      m = std::max(m, (u.middleCols(i * d, d) - u.middleCols(j * d, d)).norm());
  return m;
}

double log_skew_frustration_product(const Eigen::MatrixXd& x) {
  double s = 0.0;
  for (Eigen::Index i = 0; i < x.cols(); ++i)
    for (Eigen::Index j = i + 1; j < x.cols(); ++j) {
      const double l = (x.col(i) - x.col(j)).norm();
      if (l < 1e-14)
        throw Error(ErrorCode::ZeroFactor, "points " + std::to_string(i) + " and " + std::to_string(j) + " coincide");
      s += std::log(l);
    }
  return s;
}

double skew_frustration_product(const Eigen::MatrixXd& x) {
  double p = 1.0;
  for (Eigen::Index i = 0; i < x.cols(); ++i)
    for (Eigen::Index j = i + 1; j < x.cols(); ++j) {
      const double l = (x.col(i) - x.col(j)).norm();
      if (l < 1e-14)
        throw Error(ErrorCode::ZeroFactor, "points " + std::to_string(i) + " and " + std::to_string(j) + " coincide");
      p *= l;
    }
  return p;
}

namespace {

Eigen::MatrixXcd checked_inverse(const Eigen::MatrixXcd& m, const char* what) {
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m);
  const auto& s = svd.singularValues();
  const double smax = s(0);
  const double smin = s(s.size() - 1);
  if (!(smax > 0.0) || !(smin > smax * 1e-12))
    throw Error(ErrorCode::SingularDifference, std::string(what) + " is not invertible");
  return m.inverse();
}

}  // namespace

Eigen::VectorXcd matrix_cross_ratio_spectrum(const Eigen::MatrixXcd& u, int i, int j, int k, int l) {
  const int d = static_cast<int>(u.rows());
  const int n = static_cast<int>(u.cols()) / d;
  check_indices(n, {i, j, k, l}, "matrix_cross_ratio_spectrum");
  if (i == l || j == k) throw Error(ErrorCode::InvalidArgument, "need i != l and j != k");
  auto blk = [&](int m) { return u.middleCols(m * d, d); };
  const Eigen::MatrixXcd c = (blk(i) - blk(k)) * checked_inverse(blk(i) - blk(l), "U_i − U_l") *
                             (blk(j) - blk(l)) * checked_inverse(blk(j) - blk(k), "U_j − U_k");
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(c, false);
  Eigen::VectorXcd ev = es.eigenvalues();
  std::sort(ev.data(), ev.data() + ev.size(), [](const cplx& a, const cplx& b) {
    return a.real() < b.real() || (a.real() == b.real() && a.imag() < b.imag());
  });
  return ev;
}

const char* to_string(FunctionalKind k) {
  switch (k) {
    case FunctionalKind::Conserved: return "conserved";
    case FunctionalKind::NonIncreasing: return "non-increasing";
    case FunctionalKind::NonDecreasing: return "non-decreasing";
    case FunctionalKind::Observed: return "observed";
  }
  return "observed";
}

std::string DriftReport::verdict() const {
  if (kind == FunctionalKind::Observed) return "observed";
  return pass ? "pass" : "fail";
}

ParsedName parse_functional_name(const std::string& name) {
  ParsedName out;
  const auto lb = name.find('[');
  if (lb == std::string::npos) {
    out.base = name;
    return out;
  }
  if (name.back() != ']') throw Error(ErrorCode::UnknownFunctional, "malformed name '" + name + "'");
  out.base = name.substr(0, lb);
  std::stringstream ss(name.substr(lb + 1, name.size() - lb - 2));
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      size_t pos = 0;
      int v = std::stoi(tok, &pos);
      if (tok.find_first_not_of(' ', pos) != std::string::npos) throw std::invalid_argument(tok);
      out.args.push_back(v);
    } catch (const std::exception&) {
      throw Error(ErrorCode::UnknownFunctional, "malformed index list in '" + name + "'");
    }
  }
  return out;
}

namespace {

template <class S>
struct Functional {
  FunctionalKind kind = FunctionalKind::Conserved;
  std::function<Eigen::VectorXcd(const S&)> eval;
  double floor = 1e-8;  // drift is measured relative to max(|v0|, floor)
  bool log_j = false;
  double alpha = 0.0;
  bool unordered = false;  // entries form a multiset (eigenvalues)
};

// max_i |a_i − b_σ(i)| minimized over permutations σ; exhaustive up to 8 entries, greedy beyond.
double multiset_distance(const Eigen::VectorXcd& a, const Eigen::VectorXcd& b) {
  if (a.size() != b.size()) return std::numeric_limits<double>::infinity();
  const Eigen::Index n = a.size();
  std::vector<Eigen::Index> perm(n);
  for (Eigen::Index i = 0; i < n; ++i) perm[i] = i;
  if (n > 8) {
    std::vector<bool> used(n, false);
    double worst = 0.0;
    for (Eigen::Index i = 0; i < n; ++i) {
      Eigen::Index best = -1;
      for (Eigen::Index j = 0; j < n; ++j)
        if (!used[j] && (best < 0 || std::abs(a(i) - b(j)) < std::abs(a(i) - b(best)))) best = j;
      used[best] = true;
      worst = std::max(worst, std::abs(a(i) - b(best)));
    }
    return worst;
  }
  double best = std::numeric_limits<double>::infinity();
  do {
    double worst = 0.0;
    for (Eigen::Index i = 0; i < n && worst < best; ++i) worst = std::max(worst, std::abs(a(i) - b(perm[i])));
    best = std::min(best, worst);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

template <class S>
Functional<S> scalar(FunctionalKind kind, std::function<double(const S&)> f, double floor = 1e-8) {
  Functional<S> fn;
  fn.kind = kind;
  fn.floor = floor;
  fn.eval = [f = std::move(f)](const S& s) {
    Eigen::VectorXcd v(1);
    v(0) = f(s);
    return v;
  };
  return fn;
}

ParsedName expect_args(const std::string& name, size_t count, int n) {
  ParsedName p = parse_functional_name(name);
  if (p.args.size() != count)
    throw Error(ErrorCode::UnknownFunctional, "'" + name + "' expects " + std::to_string(count) + " indices");
  for (int a : p.args)
    if (a < 0 || a >= n) throw Error(ErrorCode::UnknownFunctional, "index out of range in '" + name + "'");
  return p;
}

[[noreturn]] void unknown(const std::string& model, const std::string& name) {
  throw Error(ErrorCode::UnknownFunctional, "unknown " + model + " functional '" + name + "'");
}

Functional<Eigen::VectorXd> phase_functional(const PhaseConfig& cfg, const std::string& name) {
  using S = Eigen::VectorXd;
  using K = FunctionalKind;
  const ParsedName p = parse_functional_name(name);
  if (p.base == "I" && p.args.empty()) return scalar<S>(K::Conserved, functional_I);
  if (p.base == "J" && p.args.empty()) {
    // frustration of the Cosine-flavor flow; see PhaseConfig
    const double alpha = std::numbers::pi / 2 - cfg.sine_alpha();
    if (!(std::abs(alpha) < std::numbers::pi / 2 - 1e-9))
      throw Error(ErrorCode::InvalidArgument, "J needs |alpha| < pi/2");
    Functional<S> fn;
    fn.log_j = true;
    fn.alpha = alpha;
    fn.eval = [alpha](const S& th) {
      Eigen::VectorXcd v(1);
      v(0) = functional_J_alpha(th, alpha);
      return v;
    };
    return fn;
  }
  if (p.base == "K") {
    auto q = expect_args(name, 4, cfg.n()).args;
    return scalar<S>(K::Conserved, [q](const S& th) { return cross_ratio_K(th, q[0], q[1], q[2], q[3]); });
  }
  if (!p.args.empty()) unknown("phase", name);
  if (p.base == "R") return scalar<S>(K::Observed, [](const S& th) { return order_parameter_R(th).r; });
  if (p.base == "phi") return scalar<S>(K::Observed, [](const S& th) { return order_parameter_R(th).phi; });
  if (p.base == "sum_theta") return scalar<S>(K::NonDecreasing, [](const S& th) { return th.sum(); }, 1.0);
  if (p.base == "D_theta") return scalar<S>(K::Observed, phase_diameter);
  unknown("phase", name);
}

Functional<Eigen::MatrixXd> sphere_functional(const SphereConfig& cfg, const std::string& name) {
  using S = Eigen::MatrixXd;
  using K = FunctionalKind;
  const ParsedName p = parse_functional_name(name);
  if (p.base == "H") {
    auto q = expect_args(name, 4, cfg.n()).args;
    return scalar<S>(K::Conserved, [q](const S& x) { return sphere_cross_ratio_H(x, q[0], q[1], q[2], q[3]); });
  }
  if (p.base == "ptolemy") {
    auto q = expect_args(name, 4, cfg.n()).args;
    return scalar<S>(K::Conserved, [q](const S& x) { return ptolemy_residual(x, q[0], q[1], q[2], q[3]); }, 1.0);
  }
  if (p.base == "inner") {
    auto q = expect_args(name, 2, cfg.n()).args;
    return scalar<S>(K::Conserved, [q](const S& x) { return x.col(q[0]).dot(x.col(q[1])); }, 1.0);
  }
  if (!p.args.empty()) unknown("sphere", name);
  if (p.base == "rho") return scalar<S>(K::NonDecreasing, sphere_order_parameter, 1.0);
  if (p.base == "rho2")
    return scalar<S>(K::NonDecreasing, [](const S& x) { return x.rowwise().mean().squaredNorm(); }, 1.0);
  if (p.base == "D_M") {
    const K kind = cfg.kappa() > 0 ? K::NonIncreasing : cfg.kappa() < 0 ? K::NonDecreasing : K::Conserved;
    return scalar<S>(kind, sphere_diameter);
  }
  if (p.base == "D_A") return scalar<S>(K::Observed, sphere_diameter_A);
  if (p.base == "max_dist") return scalar<S>(K::Observed, sphere_max_distance);
  if (p.base == "skew_product") {
    // compared in log space: relative drift is |expm1(Δ log)|
    return scalar<S>(K::Conserved, [](const S& x) { return log_skew_frustration_product(x); });
  }
  if (p.base == "norm_defect")
    return scalar<S>(K::Observed, [](const S& x) {
      return (x.colwise().norm().array() - 1.0).abs().maxCoeff();
    });
  unknown("sphere", name);
}

Functional<Eigen::MatrixXcd> unitary_functional(const UnitaryConfig& cfg, const std::string& name) {
  using S = Eigen::MatrixXcd;
  using K = FunctionalKind;
  const ParsedName p = parse_functional_name(name);
  if (p.base == "spectrum") {
    auto q = expect_args(name, 4, cfg.n()).args;
    Functional<S> fn;
    fn.eval = [q](const S& u) { return matrix_cross_ratio_spectrum(u, q[0], q[1], q[2], q[3]); };
    fn.unordered = true;
    return fn;
  }
  if (!p.args.empty()) unknown("unitary", name);
  if (p.base == "D_U") return scalar<S>(K::Observed, matrix_diameter);
  if (p.base == "unitarity_defect")
    return scalar<S>(K::Observed, [](const S& u) {
      const Eigen::Index d = u.rows();
      double m = 0.0;
      for (Eigen::Index j = 0; j < u.cols() / d; ++j) m = std::max(m, unitarity_defect(u.middleCols(j * d, d)));
      return m;
    });
  if (p.base == "equilibrium_residual")
    return scalar<S>(K::Observed, [cfg](const S& u) {
      const Eigen::MatrixXcd r = lohe_matrix_rhs(cfg, u);
      const Eigen::Index d = u.rows();
      double m = 0.0;
      for (Eigen::Index j = 0; j < u.cols() / d; ++j) m = std::max(m, r.middleCols(j * d, d).norm());
      return m;
    });
  unknown("unitary", name);
}

template <class S>
DriftReport scan(const std::string& name, const Functional<S>& fn, const Trajectory<S>& tr, double tol) {
  if (tr.size() < 1) throw Error(ErrorCode::InvalidArgument, "empty trajectory");
  DriftReport rep;
  rep.name = name;
  rep.kind = fn.kind;
  rep.tolerance = tol;
  const bool logged = fn.log_j || name == "skew_product";

  if constexpr (std::is_same_v<S, Eigen::VectorXd>) {
    if (fn.log_j) {
    const SignedLog j0 = log_J_alpha(tr.states[0], fn.alpha);
    rep.v0 = j0.value();
    for (size_t t = 1; t < tr.size(); ++t) {
      const SignedLog j = log_J_alpha(tr.states[t], fn.alpha);
      rep.max_abs_dev = std::max(rep.max_abs_dev, std::abs(j.value() - rep.v0));
      const double rel = j.sign != j0.sign ? std::numeric_limits<double>::infinity()
                         : j.sign == 0      ? 0.0
                                            : std::abs(std::expm1(j.log_abs - j0.log_abs));
      rep.max_rel_dev = std::max(rep.max_rel_dev, rel);
    }
    rep.pass = rep.max_rel_dev < tol;
    return rep;
    }
  }

  const Eigen::VectorXcd first = fn.eval(tr.states[0]);
  Eigen::VectorXcd prev = first;
  rep.v0 = logged ? std::exp(first(0).real()) : first.size() == 1 ? first(0).real() : first.cwiseAbs().maxCoeff();
  const double scale = std::max(first.cwiseAbs().maxCoeff(), fn.floor);
  double worst_step = 0.0;
  for (size_t t = 1; t < tr.size(); ++t) {
    const Eigen::VectorXcd v = fn.eval(tr.states[t]);
    if (logged) {
      const double dl = v(0).real() - first(0).real();
      rep.max_abs_dev = std::max(rep.max_abs_dev, std::abs(std::exp(v(0).real()) - rep.v0));
      rep.max_rel_dev = std::max(rep.max_rel_dev, std::abs(std::expm1(dl)));
    } else {
      const double dev = fn.unordered               ? multiset_distance(first, v)
                         : v.size() == first.size() ? (v - first).cwiseAbs().maxCoeff()
                                                    : std::numeric_limits<double>::infinity();
      rep.max_abs_dev = std::max(rep.max_abs_dev, dev);
    }
    const double step = v(0).real() - prev(0).real();
    if (fn.kind == FunctionalKind::NonIncreasing) worst_step = std::max(worst_step, step);
    if (fn.kind == FunctionalKind::NonDecreasing) worst_step = std::max(worst_step, -step);
    prev = v;
  }
  switch (fn.kind) {
    case FunctionalKind::Conserved:
      if (!logged) rep.max_rel_dev = rep.max_abs_dev / scale;
      rep.pass = rep.max_rel_dev < tol;
      break;
    case FunctionalKind::NonIncreasing:
    case FunctionalKind::NonDecreasing:
      rep.max_abs_dev = worst_step;
      rep.max_rel_dev = worst_step / scale;
      rep.pass = rep.max_rel_dev <= tol;
      break;
    case FunctionalKind::Observed:
      rep.max_rel_dev = rep.max_abs_dev / scale;
      rep.pass = true;
      break;
  }
  return rep;
}

template <class C, class S, class Lookup>
std::vector<DriftReport> report_all(const C& cfg, const Trajectory<S>& tr, const std::vector<std::string>& names,
                                    double tol, Lookup lookup) {
  std::vector<DriftReport> out;
  out.reserve(names.size());
  for (const auto& name : names) out.push_back(scan(name, lookup(cfg, name), tr, tol));
  return out;
}

template <class C, class S, class Lookup>
void record_all(const C& cfg, Trajectory<S>& tr, const std::vector<std::string>& names, Lookup lookup) {
  for (const auto& name : names) {
    const auto fn = lookup(cfg, name);
    std::vector<Eigen::VectorXcd> vals;
    vals.reserve(tr.size());
    for (const auto& s : tr.states) vals.push_back(fn.eval(s));
    const bool logged = name == "skew_product";
    if (!vals.empty() && vals[0].size() > 1) {
      for (Eigen::Index k = 0; k < vals[0].size(); ++k) {
        auto& re = tr.observables[name + "#re" + std::to_string(k)];
        auto& im = tr.observables[name + "#im" + std::to_string(k)];
        for (const auto& v : vals) {
          re.push_back(v(k).real());
          im.push_back(v(k).imag());
        }
      }
    } else {
      auto& series = tr.observables[name];
      for (const auto& v : vals) series.push_back(logged ? std::exp(v(0).real()) : v(0).real());
    }
  }
}

}  // namespace

std::vector<DriftReport> drift_report(const PhaseConfig& cfg, const PhaseTrajectory& tr,
                                      const std::vector<std::string>& names, double tol) {
  return report_all(cfg, tr, names, tol, phase_functional);
}

std::vector<DriftReport> drift_report(const SphereConfig& cfg, const SphereTrajectory& tr,
                                      const std::vector<std::string>& names, double tol) {
  return report_all(cfg, tr, names, tol, sphere_functional);
}

std::vector<DriftReport> drift_report(const UnitaryConfig& cfg, const UnitaryTrajectory& tr,
                                      const std::vector<std::string>& names, double tol) {
  return report_all(cfg, tr, names, tol, unitary_functional);
}

void record_observables(const PhaseConfig& cfg, PhaseTrajectory& tr, const std::vector<std::string>& names) {
  record_all(cfg, tr, names, phase_functional);
}

void record_observables(const SphereConfig& cfg, SphereTrajectory& tr, const std::vector<std::string>& names) {
  record_all(cfg, tr, names, sphere_functional);
}

void record_observables(const UnitaryConfig& cfg, UnitaryTrajectory& tr, const std::vector<std::string>& names) {
  record_all(cfg, tr, names, unitary_functional);
}

bool is_known_functional(const std::string& model, const std::string& name) {
  static const char* phase[] = {"I", "J", "K", "R", "phi", "sum_theta", "D_theta"};
  static const char* sphere[] = {"H", "ptolemy", "inner", "rho", "rho2", "D_M", "D_A", "max_dist", "skew_product", "norm_defect"};
  static const char* unitary[] = {"D_U", "unitarity_defect", "spectrum", "equilibrium_residual"};
  std::string base;
  try {
    base = parse_functional_name(name).base;
  } catch (const Error&) {
    return false;
  }
  auto has = [&](const auto& list) {
    return std::any_of(std::begin(list), std::end(list), [&](const char* s) { return base == s; });
  };
  if (model == "phase") return has(phase);
  if (model == "sphere") return has(sphere);
  if (model == "unitary") return has(unitary);
  return false;
}

std::string drift_reports_csv(const std::vector<DriftReport>& reports) {
  std::string out = "name,v0,max_abs_dev,max_rel_dev,verdict\r\n";
  char buf[96];
  auto num = [&](double v) {
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return std::string(buf);
  };
  for (const auto& r : reports) {
    std::string name = r.name;
    if (name.find(',') != std::string::npos) name = "\"" + name + "\"";
    out += name + "," + num(r.v0) + "," + num(r.max_abs_dev) + "," + num(r.max_rel_dev) + "," + r.verdict() + "\r\n";
  }
  return out;
}

}  // namespace synclab
