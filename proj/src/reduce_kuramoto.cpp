#include "synclab/reduce_kuramoto.hpp"

#include <cmath>
#include <numbers>

#include "synclab/dynamics.hpp"
#include "synclab/error.hpp"
#include "synclab/invariants.hpp"

namespace synclab {

namespace {

double wrap(double b) { return std::remainder(b, 2 * std::numbers::pi); }

}  // namespace

double stereo_project_phase(double theta_j, double theta_n) {
  const double beta = wrap(theta_j - theta_n);
  if (std::abs(beta) < kCoincidenceTol)
    throw Error(ErrorCode::CoincidentPhase, "|beta mod 2pi| < 1e-12");
  const double s = std::sin(beta);
  const double h = std::sin(beta / 2);
  const double one_minus_cos = 2 * h * h;
  if (one_minus_cos >= std::abs(s)) return s / one_minus_cos;
  const double c = std::cos(beta / 2);
  return 2 * c * c / s;
}

ProjectedPhaseData project_phase_data(const PhaseConfig& cfg) {
  if (!cfg.identical_frequencies())
    throw Error(ErrorCode::InvalidArgument, "the (f, g) reduction needs identical frequencies");
  ProjectedPhaseData d;
  d.n = cfg.n();
  d.kappa = cfg.kappa();
  d.alpha = cfg.sine_alpha();
  const auto& th = cfg.theta();
  const int ref = d.n - 1;
  std::vector<int> coincident;
  std::vector<double> xs;
  for (int j = 0; j < ref; ++j) {
    if (std::abs(wrap(th(j) - th(ref))) < kCoincidenceTol) {
      coincident.push_back(j);
    } else {
      d.perm.push_back(j);
      xs.push_back(stereo_project_phase(th(j), th(ref)));
    }
  }
  d.perm.insert(d.perm.end(), coincident.begin(), coincident.end());
  d.perm.push_back(ref);
  d.m = static_cast<int>(coincident.size()) + 1;
  d.x0 = Eigen::Map<Eigen::VectorXd>(xs.data(), static_cast<Eigen::Index>(xs.size()));
  return d;
}

ABCoefficients ab_coefficients(const Eigen::VectorXd& x, int m, int n, double kappa, double alpha) {
  const double sa = std::sin(alpha);
  const double ca = std::cos(alpha);
  double a = m * sa;
  double b = m * ca;
  for (Eigen::Index k = 0; k < x.size(); ++k) {
    const double xk = x(k);
    const double q = xk * xk + 1;
    const double u = 2 * xk / q;
    const double v = (xk * xk - 1) / q;
    a += u * ca + v * sa;
    b += -u * sa + v * ca;
  }
  const double c = kappa / n;
  return {c * a, c * b};
}

FGTrajectory integrate_fg(const ProjectedPhaseData& data, const IntegratorSettings& st, double t_final) {
  auto f = [&data](const Eigen::VectorXd& y) {
    const Eigen::VectorXd x = (y(0) * data.x0.array() + y(1)).matrix();
    const auto ab = ab_coefficients(x, data.m, data.n, data.kappa, data.alpha);
    Eigen::VectorXd dy(2);
    dy << ab.b * y(0), ab.a + ab.b * y(1);
    return dy;
  };
  Eigen::VectorXd y0(2);
  y0 << 1.0, 0.0;
  FGTrajectory tr = integrate_ode(f, y0, st, t_final);
  const double k = std::abs(data.kappa);
  for (size_t i = 0; i < tr.size(); ++i) {
    const double e = std::exp(k * tr.times[i]);
    const auto& y = tr.states[i];
    if (!(y(0) > 0.0)) throw Error(ErrorCode::IntegratorFailure, "f lost positivity");
    if (std::abs(y(0)) > 1.1 * e || std::abs(y(1)) > 1.1 * (e - 1) + 1e-9)
      throw Error(ErrorCode::IntegratorFailure, "a-priori bound on (f, g) exceeded by more than 10%");
  }
  return tr;
}

FGBoundCheck check_fg_bounds(const ProjectedPhaseData& data, const FGTrajectory& fg) {
  FGBoundCheck c;
  const double k = std::abs(data.kappa);
  for (size_t i = 0; i < fg.size(); ++i) {
    const double e = std::exp(k * fg.times[i]);
    const double f = fg.states[i](0);
    const double g = fg.states[i](1);
    c.worst_f = std::max(c.worst_f, std::abs(f) / e);
    c.worst_g = std::max(c.worst_g, (std::abs(g) - (e - 1)) / e);
    c.min_f = std::min(c.min_f, f);
    if (std::abs(f) > e * (1 + 1e-6) || std::abs(g) > (e - 1) * (1 + 1e-6) + 1e-9 || !(f > 0)) c.ok = false;
  }
  return c;
}

ReconstructionError reconstruct_and_compare(const PhaseTrajectory& full, const ProjectedPhaseData& data,
                                            const FGTrajectory& reduced) {
  if (full.size() != reduced.size()) throw Error(ErrorCode::MismatchedGrids, "trajectory lengths differ");
  for (size_t i = 0; i < full.size(); ++i)
    if (std::abs(full.times[i] - reduced.times[i]) > 1e-12 * std::max(1.0, full.times[i]))
      throw Error(ErrorCode::MismatchedGrids, "time grids differ at record " + std::to_string(i));
  ReconstructionError out;
  const int ref = data.perm.back();
  const auto r = static_cast<Eigen::Index>(data.x0.size());
  Eigen::VectorXd xt(r);
  for (size_t i = 0; i < full.size(); ++i) {
    const auto& th = full.states[i];
    const double f = reduced.states[i](0);
    const double g = reduced.states[i](1);
    for (Eigen::Index k = 0; k < r; ++k) {
      xt(k) = stereo_project_phase(th(data.perm[static_cast<size_t>(k)]), th(ref));
      out.max_error = std::max(out.max_error, std::abs(g + f * data.x0(k) - xt(k)));
    }
    for (size_t k = static_cast<size_t>(r); k + 1 < data.perm.size(); ++k)
      out.max_error = std::max(out.max_error, std::abs(wrap(th(data.perm[k]) - th(ref))));
    for (Eigen::Index a = 0; a < r; ++a)
      for (Eigen::Index b = a + 1; b < r; ++b)
        for (Eigen::Index c = 0; c < r; ++c)
          for (Eigen::Index d = c + 1; d < r; ++d) {
            const double lhs = (xt(a) - xt(b)) * (data.x0(c) - data.x0(d));
            const double rhs = (data.x0(a) - data.x0(b)) * (xt(c) - xt(d));
            const double s = std::max({1.0, std::abs(lhs), std::abs(rhs)});
            out.cross_ratio_error = std::max(out.cross_ratio_error, std::abs(lhs - rhs) / s);
          }
  }
  return out;
}

const char* to_string(DichotomyVerdict v) {
  switch (v) {
    case DichotomyVerdict::SyncR1: return "SyncR1";
    case DichotomyVerdict::IncoherenceR0: return "IncoherenceR0";
    case DichotomyVerdict::Inconclusive: return "Inconclusive";
  }
  return "Inconclusive";
}

DichotomyResult dichotomy_check(const Eigen::VectorXd& theta0, double alpha, double kappa, double t_final,
                                double eps, const IntegratorSettings& st) {
  DichotomyResult res;
  const int n = static_cast<int>(theta0.size());
  if (alpha > 0 && alpha < std::numbers::pi / 2) {
    res.branch = 1;
    res.precondition = phase_diameter(theta0) < 2 * alpha;
  } else if (alpha < 0 && alpha > -std::numbers::pi / 2) {
    res.branch = 2;
    res.precondition = true;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (std::abs(wrap(theta0(i) - theta0(j))) < kCoincidenceTol) res.precondition = false;
  }
  const PhaseConfig cfg(theta0, Eigen::VectorXd(), kappa, alpha, Flavor::Cosine);
  const PhaseTrajectory tr = integrate(cfg, st, t_final);
  res.r_final = order_parameter_R(tr.states.back()).r;
  for (size_t i = 1; i < tr.size(); ++i) {
    const double s0 = tr.states[i - 1].sum();
    const double step = tr.states[i].sum() - s0;
    res.worst_sum_theta_step = std::min(res.worst_sum_theta_step, step);
    if (step < -1e-12 * std::max(1.0, std::abs(s0))) res.sum_theta_monotone = false;
  }
  if (res.r_final > 1 - eps)
    res.verdict = DichotomyVerdict::SyncR1;
  else if (res.r_final < eps)
    res.verdict = DichotomyVerdict::IncoherenceR0;
  return res;
}

}  // namespace synclab
