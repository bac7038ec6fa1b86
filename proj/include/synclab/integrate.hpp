#pragma once

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <map>
#include <string>
#include <vector>

#include "synclab/error.hpp"
#include "synclab/state.hpp"

namespace synclab {

enum class Scheme { RK4, DOPRI5 };
enum class Projection { None, Normalize, Polar };

const char* to_string(Scheme s);
const char* to_string(Projection p);
Scheme parse_scheme(const std::string& s);
Projection parse_projection(const std::string& s);

struct IntegratorSettings {
  Scheme scheme = Scheme::RK4;
  double dt = 1e-3;      // fixed step, or initial step when adaptive
  double rtol = 1e-9;    // DOPRI5 only
  double atol = 1e-12;   // DOPRI5 only
  bool adaptive = true;  // DOPRI5 only; false runs DOPRI5 at fixed dt
  Projection projection = Projection::None;
  int record_every = 1;

  void check() const;
};

template <class S>
struct Trajectory {
  std::vector<double> times;
  std::vector<S> states;
  std::map<std::string, std::vector<double>> observables;

  size_t size() const { return times.size(); }
};

using PhaseTrajectory = Trajectory<Eigen::VectorXd>;
using SphereTrajectory = Trajectory<Eigen::MatrixXd>;
using UnitaryTrajectory = Trajectory<Eigen::MatrixXcd>;

namespace detail {

template <class S>
bool all_finite(const S& y) {
  return y.allFinite();
}

// Real scalar of a (possibly complex) state type.
template <class S>
using real_of = typename Eigen::NumTraits<typename S::Scalar>::Real;

template <class S, class F>
S rk4_step(const F& f, const S& y, real_of<S> h) {
  using R = real_of<S>;
  const R half = h / 2;
  const S k1 = f(y);
  const S k2 = f(S(y + half * k1));
  const S k3 = f(S(y + half * k2));
  const S k4 = f(S(y + h * k3));
  return y + (h / 6) * (k1 + R(2) * k2 + R(2) * k3 + k4);
}

// Dormand–Prince 5(4); returns the 5th-order solution and writes the embedded error.
template <class S, class F>
S dopri5_step(const F& f, const S& y, real_of<S> h, S* err) {
  using R = real_of<S>;
  // Coefficients are formed in R so extended-precision runs keep the order conditions exact.
  const R a21 = R(1) / 5;
  const R a31 = R(3) / 40, a32 = R(9) / 40;
  const R a41 = R(44) / 45, a42 = R(-56) / 15, a43 = R(32) / 9;
  const R a51 = R(19372) / 6561, a52 = R(-25360) / 2187, a53 = R(64448) / 6561, a54 = R(-212) / 729;
  const R a61 = R(9017) / 3168, a62 = R(-355) / 33, a63 = R(46732) / 5247, a64 = R(49) / 176,
          a65 = R(-5103) / 18656;
  const R b1 = R(35) / 384, b3 = R(500) / 1113, b4 = R(125) / 192, b5 = R(-2187) / 6784, b6 = R(11) / 84;
  const R e1 = R(71) / 57600, e3 = R(-71) / 16695, e4 = R(71) / 1920, e5 = R(-17253) / 339200,
          e6 = R(22) / 525, e7 = R(-1) / 40;
  const S k1 = f(y);
  const S k2 = f(S(y + h * (a21 * k1)));
  const S k3 = f(S(y + h * (a31 * k1 + a32 * k2)));
  const S k4 = f(S(y + h * (a41 * k1 + a42 * k2 + a43 * k3)));
  const S k5 = f(S(y + h * (a51 * k1 + a52 * k2 + a53 * k3 + a54 * k4)));
  const S k6 = f(S(y + h * (a61 * k1 + a62 * k2 + a63 * k3 + a64 * k4 + a65 * k5)));
  S y5 = y + h * (b1 * k1 + b3 * k3 + b4 * k4 + b5 * k5 + b6 * k6);
  if (err) {
    const S k7 = f(y5);
    *err = h * (e1 * k1 + e3 * k3 + e4 * k4 + e5 * k5 + e6 * k6 + e7 * k7);
  }
  return y5;
}

template <class S>
double scaled_error(const S& err, const S& y0, const S& y1, double rtol, double atol) {
  using R = real_of<S>;
  auto scale = (R(atol) + R(rtol) * y0.cwiseAbs().cwiseMax(y1.cwiseAbs()).array());
  return static_cast<double>((err.cwiseAbs().array() / scale).maxCoeff());
}

template <class S>
void ensure_finite(const S& y, double t) {
  if (!all_finite(y)) throw Error(ErrorCode::NonFiniteState, "non-finite state at t = " + std::to_string(t));
}

}  // namespace detail

struct Identity {
  template <class S>
  void operator()(S&) const {}
};

// Integrates dy/dt = f(y) on [0, T]. `project` is applied after every accepted step.
template <class S, class F, class P = Identity>
Trajectory<S> integrate_ode(const F& f, const S& y0, const IntegratorSettings& st, double t_final,
                            const P& project = P{}) {
  st.check();
  if (!(t_final >= 0.0) || !std::isfinite(t_final))
    throw Error(ErrorCode::InvalidArgument, "T_final must be finite and >= 0");
  detail::ensure_finite(y0, 0.0);
  Trajectory<S> tr;
  tr.times.push_back(0.0);
  tr.states.push_back(y0);
  if (t_final == 0.0) return tr;

  S y = y0;
  if (st.scheme == Scheme::RK4 || !st.adaptive) {
    const auto n = static_cast<long long>(std::max(1.0, std::ceil(t_final / st.dt * (1.0 - 1e-12))));
    const detail::real_of<S> h = detail::real_of<S>(t_final) / static_cast<detail::real_of<S>>(n);
    for (long long k = 1; k <= n; ++k) {
      y = st.scheme == Scheme::RK4 ? detail::rk4_step(f, y, h)
                                   : detail::dopri5_step<S>(f, y, h, nullptr);
      project(y);
      const double t = k == n ? t_final : static_cast<double>(static_cast<detail::real_of<S>>(k) * h);
      detail::ensure_finite(y, t);
      if (k % st.record_every == 0 || k == n) {
        tr.times.push_back(t);
        tr.states.push_back(y);
      }
    }
    return tr;
  }

  double t = 0.0;
  double h = std::min(st.dt, t_final);
  long long accepted = 0;
  S err = y;
  while (t < t_final) {
    const bool last = t + h >= t_final;
    if (last) h = t_final - t;
    if (h < 1e-14 * std::max(1.0, std::abs(t)))
      throw Error(ErrorCode::StepSizeUnderflow, "step size underflow at t = " + std::to_string(t));
    S y1 = detail::dopri5_step(f, y, h, &err);
    const double e = detail::scaled_error(err, y, y1, st.rtol, st.atol);
    if (e <= 1.0 && std::isfinite(e)) {
      t = last ? t_final : t + h;
      y = std::move(y1);
      project(y);
      detail::ensure_finite(y, t);
      ++accepted;
      if (accepted % st.record_every == 0 || t == t_final) {
        tr.times.push_back(t);
        tr.states.push_back(y);
      }
    }
    const double fac = std::isfinite(e) ? (e == 0.0 ? 5.0 : 0.9 * std::pow(e, -0.2)) : 0.2;
    h *= std::clamp(fac, 0.2, 5.0);
  }
  return tr;
}

void normalize_columns(Eigen::MatrixXd& x);
void polar_blocks(Eigen::MatrixXcd& u);

PhaseTrajectory integrate(const PhaseConfig& cfg, const IntegratorSettings& st, double t_final);
SphereTrajectory integrate(const SphereConfig& cfg, const IntegratorSettings& st, double t_final);
UnitaryTrajectory integrate(const UnitaryConfig& cfg, const IntegratorSettings& st, double t_final);

struct OrderEstimate {
  double p = 0.0;
  bool exact = false;  // differences at roundoff level
  double e1 = 0.0;     // ‖y_h − y_{h/2}‖
  double e2 = 0.0;     // ‖y_{h/2} − y_{h/4}‖
};

// Runs fixed steps h, h/2, h/4 without projection and returns log2(e1/e2). Differences within
// 1000 ulp of the state count as roundoff, and the estimate is then reported as exact.
template <class S, class F>
OrderEstimate convergence_order_ode(const F& f, const S& y0, Scheme scheme, double t_final, double h) {
  IntegratorSettings st;
  st.scheme = scheme;
  st.adaptive = false;
  S y[3];
  for (int i = 0; i < 3; ++i) {
    st.dt = h / static_cast<double>(1 << i);
    y[i] = integrate_ode(f, y0, st, t_final).states.back();
  }
  OrderEstimate est;
  using R = detail::real_of<S>;
  est.e1 = static_cast<double>((y[0] - y[1]).norm());
  est.e2 = static_cast<double>((y[1] - y[2]).norm());
  const double floor = static_cast<double>(1000 * Eigen::NumTraits<R>::epsilon() * (1 + y[2].norm()));
  if (est.e1 <= floor || est.e2 <= floor) {
    est.exact = true;
    return est;
  }
  est.p = std::log2(est.e1 / est.e2);
  return est;
}

// Model wrappers integrate in long double: for the sphere flow DOPRI5 stays in its pre-asymptotic
// (apparent order ≈ 6) regime until double-precision differences reach roundoff.
OrderEstimate convergence_order(const PhaseConfig& cfg, Scheme scheme, double t_final = 1.0, double h = 0.05);
OrderEstimate convergence_order(const SphereConfig& cfg, Scheme scheme, double t_final = 1.0, double h = 0.05);
OrderEstimate convergence_order(const UnitaryConfig& cfg, Scheme scheme, double t_final = 1.0, double h = 0.05);

}  // namespace synclab
