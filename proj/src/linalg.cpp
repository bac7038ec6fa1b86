#include "synclab/linalg.hpp"

#include <cmath>

namespace synclab {

Eigen::MatrixXd skew_part(const Eigen::MatrixXd& a) { return 0.5 * (a - a.transpose()); }

Eigen::MatrixXcd hermitian_part(const Eigen::MatrixXcd& a) { return 0.5 * (a + a.adjoint()); }

Eigen::MatrixXcd polar_unitary(const Eigen::MatrixXcd& a, double tol, int max_iter) {
  Eigen::MatrixXcd u = a;
  for (int it = 0; it < max_iter; ++it) {
    Eigen::MatrixXcd next = 0.5 * (u + u.adjoint().inverse());
    double delta = (next - u).norm();
    u = std::move(next);
    if (delta < tol) break;
  }
  return u;
}

Eigen::MatrixXd polar_orthogonal(const Eigen::MatrixXd& a, double tol, int max_iter) {
  Eigen::MatrixXd m = a;
  for (int it = 0; it < max_iter; ++it) {
    Eigen::MatrixXd next = 0.5 * (m + m.transpose().inverse());
    double delta = (next - m).norm();
    m = std::move(next);
    if (delta < tol) break;
  }
  return m;
}

double op_norm(const Eigen::MatrixXd& a, int max_iter, double tol) {
  if (a.size() == 0) return 0.0;
  Eigen::MatrixXd g = a.transpose() * a;
  if (g.norm() == 0.0) return 0.0;
  // deterministic start with components in every direction
  Eigen::VectorXd v = Eigen::VectorXd::LinSpaced(g.cols(), 1.0, 2.0).normalized();
  double lambda = 0.0;
  for (int it = 0; it < max_iter; ++it) {
    Eigen::VectorXd w = g * v;
    double nrm = w.norm();
    if (nrm == 0.0) break;
    double next = v.dot(w);
    v = w / nrm;
    if (std::abs(next - lambda) <= tol * std::abs(next)) {
      lambda = next;
      break;
    }
    lambda = next;
  }
  return std::sqrt(std::max(lambda, 0.0));
}

double unitarity_defect(const Eigen::MatrixXcd& u) {
  return (u * u.adjoint() - Eigen::MatrixXcd::Identity(u.rows(), u.rows())).norm();
}

double orthogonality_defect(const Eigen::MatrixXd& m) {
  return (m.transpose() * m - Eigen::MatrixXd::Identity(m.cols(), m.cols())).norm();
}

Eigen::MatrixXcd random_unitary(int d, Rng& rng) {
  std::normal_distribution<double> g;
  Eigen::MatrixXcd z(d, d);
  for (int j = 0; j < d; ++j)
    for (int i = 0; i < d; ++i) z(i, j) = cplx(g(rng), g(rng));
  Eigen::HouseholderQR<Eigen::MatrixXcd> qr(z);
  Eigen::MatrixXcd q = qr.householderQ();
  Eigen::MatrixXcd r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int k = 0; k < d; ++k) {
    cplx p = r(k, k) / std::abs(r(k, k));
    q.col(k) *= p;
  }
  return q;
}

Eigen::MatrixXcd random_hermitian(int d, Rng& rng) {
  std::normal_distribution<double> g;
  Eigen::MatrixXcd z(d, d);
  for (int j = 0; j < d; ++j)
    for (int i = 0; i < d; ++i) z(i, j) = cplx(g(rng), g(rng));
  return hermitian_part(z);
}

Eigen::MatrixXd random_skew(int d, Rng& rng) {
  std::normal_distribution<double> g;
  Eigen::MatrixXd z(d, d);
  for (int j = 0; j < d; ++j)
    for (int i = 0; i < d; ++i) z(i, j) = g(rng);
  return skew_part(z);
}

Eigen::VectorXd random_unit_vector(int dim, Rng& rng) {
  std::normal_distribution<double> g;
  Eigen::VectorXd v(dim);
  for (int i = 0; i < dim; ++i) v(i) = g(rng);
  return v.normalized();
}

Eigen::MatrixXd random_sphere_points(int dim, int n, Rng& rng) {
  Eigen::MatrixXd x(dim, n);
  for (int j = 0; j < n; ++j) x.col(j) = random_unit_vector(dim, rng);
  return x;
}

Eigen::MatrixXcd expi_hermitian(const Eigen::MatrixXcd& a) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(hermitian_part(a));
  Eigen::VectorXcd phase(es.eigenvalues().size());
  for (Eigen::Index k = 0; k < phase.size(); ++k)
    phase(k) = std::exp(cplx(0.0, es.eigenvalues()(k)));
  return es.eigenvectors() * phase.asDiagonal() * es.eigenvectors().adjoint();
}

}  // namespace synclab
