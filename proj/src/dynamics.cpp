#include "synclab/dynamics.hpp"

#include <cmath>

#include "synclab/error.hpp"
#include "rhs_impl.hpp"

namespace synclab {

TangentPhase kuramoto_rhs(const PhaseConfig& cfg) { return kuramoto_rhs(cfg, cfg.theta()); }

TangentPhase kuramoto_rhs(const PhaseConfig& params, const Eigen::VectorXd& theta) {
  return detail::kuramoto_rhs_t<double>(params, theta);
}

TangentSphere sphere_rhs(const SphereConfig& cfg) { return sphere_rhs(cfg, cfg.x()); }

TangentSphere sphere_rhs(const SphereConfig& params, const Eigen::MatrixXd& x) {
  return detail::sphere_rhs_t<double>(params, x);
}

TangentUnitary lohe_matrix_rhs(const UnitaryConfig& cfg) { return lohe_matrix_rhs(cfg, cfg.u()); }

TangentUnitary lohe_matrix_rhs(const UnitaryConfig& params, const Eigen::MatrixXcd& u) {
  return detail::lohe_matrix_rhs_t<double>(params, u);
}

UnitaryConfig right_translate(const UnitaryConfig& cfg, const Eigen::MatrixXcd& l, double tol) {
  if (l.rows() != cfg.d() || l.cols() != cfg.d()) throw Error(ErrorCode::DimensionMismatch, "L shape");
  double dev = unitarity_defect(l);
  if (!(dev <= tol)) throw Error(ErrorCode::NonUnitary, "L defect " + std::to_string(dev));
  return cfg.with_u(translate_tangent(cfg.u(), l));
}

TangentUnitary translate_tangent(const TangentUnitary& du, const Eigen::MatrixXcd& l) {
  const Eigen::Index d = du.rows();
  TangentUnitary out(d, du.cols());
  for (Eigen::Index j = 0; j < du.cols() / d; ++j) out.middleCols(j * d, d) = du.middleCols(j * d, d) * l;
  return out;
}

Eigen::Matrix4d frustration_matrix4(const Eigen::Vector4d& v) {
  Eigen::Matrix4d m;
  m << v(3), -v(2), v(1), v(0),
       v(2), v(3), -v(0), v(1),
       -v(1), v(0), v(3), v(2),
       -v(0), -v(1), -v(2), v(3);
  return m;
}

Eigen::Matrix4d omega_from_hamiltonian(const Eigen::Matrix2cd& h) {
  const double w1 = (h * pauli(1)).trace().real() / 2;
  const double w2 = (h * pauli(2)).trace().real() / 2;
  const double w3 = (h * pauli(3)).trace().real() / 2;
  Eigen::Matrix4d m;
  m << 0.0, w3, -w2, -w1,
       -w3, 0.0, w1, -w2,
       w2, -w1, 0.0, -w3,
       w1, w2, w3, 0.0;
  return m;
}

double reduce_matrix_to_sphere_check(const UnitaryConfig& cfg) {
  if (cfg.d() != 2) throw Error(ErrorCode::DimensionMismatch, "matrix-to-sphere check needs d = 2");
  const int n = cfg.n();
  if (std::abs(cfg.v().determinant() - 1.0) > kUnitaryTol || unitarity_defect(cfg.v()) > kUnitaryTol)
    throw Error(ErrorCode::InvalidArgument, "V must lie in SU(2)");
  const Eigen::Vector4d vq = quaternion_coords(cfg.v());
  const Eigen::Matrix4d vt = frustration_matrix4(vq);

  std::vector<double> th(static_cast<size_t>(n));
  Eigen::Matrix<double, 4, Eigen::Dynamic> x(4, n);
  for (int j = 0; j < n; ++j) {
    auto e = embed_unitary2_to_sphere(cfg.block(j));
    th[static_cast<size_t>(j)] = e.theta;
    x.col(j) = e.x;
  }
  const TangentUnitary full = lohe_matrix_rhs(cfg);
  const double c = cfg.kappa() / n;
  double worst = 0.0;
  for (int j = 0; j < n; ++j) {
    const Eigen::Matrix2cd& hj = cfg.h(j);
    const double nu = hj.trace().real() / 2;
    double dth = nu;
    Eigen::Vector4d dx = omega_from_hamiltonian(hj) * x.col(j);
    for (int k = 0; k < n; ++k) {
      const double delta = th[static_cast<size_t>(k)] - th[static_cast<size_t>(j)];
      const Eigen::Vector4d vxk = vt * x.col(k);
      const double ip = x.col(j).dot(vxk);
      dth += c * std::sin(delta) * ip;
      dx += c * std::cos(delta) * (vxk - ip * x.col(j));
    }
    const double tj = th[static_cast<size_t>(j)];
    Eigen::Matrix2cd push = cplx(0.0, -dth) * assemble_unitary2(tj, x.col(j)) +
                            std::exp(cplx(0.0, -tj)) * assemble_unitary2(0.0, dx);
    worst = std::max(worst, (push - full.middleCols(2 * j, 2)).cwiseAbs().maxCoeff());
  }
  return worst;
}

}  // namespace synclab
