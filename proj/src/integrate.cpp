#include "synclab/integrate.hpp"

#include "synclab/dynamics.hpp"
#include "rhs_impl.hpp"

namespace synclab {

const char* to_string(Scheme s) { return s == Scheme::RK4 ? "RK4" : "DOPRI5"; }

const char* to_string(Projection p) {
  switch (p) {
    case Projection::None: return "None";
    case Projection::Normalize: return "Normalize";
    case Projection::Polar: return "Polar";
  }
  return "None";
}

Scheme parse_scheme(const std::string& s) {
  if (s == "RK4") return Scheme::RK4;
  if (s == "DOPRI5") return Scheme::DOPRI5;
  throw Error(ErrorCode::InvalidArgument, "unknown scheme '" + s + "'");
}

Projection parse_projection(const std::string& s) {
  if (s == "None") return Projection::None;
  if (s == "Normalize") return Projection::Normalize;
  if (s == "Polar") return Projection::Polar;
  throw Error(ErrorCode::InvalidArgument, "unknown projection '" + s + "'");
}

void IntegratorSettings::check() const {
  if (!(dt > 0.0) || !std::isfinite(dt)) throw Error(ErrorCode::InvalidArgument, "dt must be > 0");
  if (record_every < 1) throw Error(ErrorCode::InvalidArgument, "record_every must be >= 1");
  if (scheme == Scheme::DOPRI5 && adaptive) {
    if (!(rtol > 0.0 && rtol <= 1e-2)) throw Error(ErrorCode::InvalidArgument, "rtol must lie in (0, 1e-2]");
    if (!(atol > 0.0 && atol <= 1e-2)) throw Error(ErrorCode::InvalidArgument, "atol must lie in (0, 1e-2]");
  }
}

void normalize_columns(Eigen::MatrixXd& x) {
  for (Eigen::Index j = 0; j < x.cols(); ++j) x.col(j).normalize();
}

void polar_blocks(Eigen::MatrixXcd& u) {
  const Eigen::Index d = u.rows();
  for (Eigen::Index j = 0; j < u.cols() / d; ++j)
    u.middleCols(j * d, d) = polar_unitary(u.middleCols(j * d, d));
}

PhaseTrajectory integrate(const PhaseConfig& cfg, const IntegratorSettings& st, double t_final) {
  if (st.projection != Projection::None)
    throw Error(ErrorCode::InvalidArgument, "phase model takes no projection");
  auto f = [&cfg](const Eigen::VectorXd& th) { return kuramoto_rhs(cfg, th); };
  return integrate_ode(f, cfg.theta(), st, t_final);
}

SphereTrajectory integrate(const SphereConfig& cfg, const IntegratorSettings& st, double t_final) {
  if (st.projection == Projection::Polar)
    throw Error(ErrorCode::InvalidArgument, "sphere model takes Normalize or None");
  auto f = [&cfg](const Eigen::MatrixXd& x) { return sphere_rhs(cfg, x); };
  if (st.projection == Projection::Normalize)
    return integrate_ode(f, cfg.x(), st, t_final, [](Eigen::MatrixXd& x) { normalize_columns(x); });
  return integrate_ode(f, cfg.x(), st, t_final);
}

UnitaryTrajectory integrate(const UnitaryConfig& cfg, const IntegratorSettings& st, double t_final) {
  if (st.projection == Projection::Normalize)
    throw Error(ErrorCode::InvalidArgument, "matrix model takes Polar or None");
  auto f = [&cfg](const Eigen::MatrixXcd& u) { return lohe_matrix_rhs(cfg, u); };
  if (st.projection == Projection::Polar)
    return integrate_ode(f, cfg.u(), st, t_final, [](Eigen::MatrixXcd& u) { polar_blocks(u); });
  return integrate_ode(f, cfg.u(), st, t_final);
}

OrderEstimate convergence_order(const PhaseConfig& cfg, Scheme scheme, double t_final, double h) {
  using Y = detail::VecR<long double>;
  auto f = [&cfg](const Y& th) { return detail::kuramoto_rhs_t<long double>(cfg, th); };
  return convergence_order_ode(f, Y(cfg.theta().cast<long double>()), scheme, t_final, h);
}

OrderEstimate convergence_order(const SphereConfig& cfg, Scheme scheme, double t_final, double h) {
  using Y = detail::MatR<long double>;
  auto f = [&cfg](const Y& x) { return detail::sphere_rhs_t<long double>(cfg, x); };
  return convergence_order_ode(f, Y(cfg.x().cast<long double>()), scheme, t_final, h);
}

OrderEstimate convergence_order(const UnitaryConfig& cfg, Scheme scheme, double t_final, double h) {
  using Y = detail::CMatR<long double>;
  auto f = [&cfg](const Y& u) { return detail::lohe_matrix_rhs_t<long double>(cfg, u); };
  return convergence_order_ode(f, Y(cfg.u().cast<std::complex<long double>>()), scheme, t_final, h);
}

}  // namespace synclab
