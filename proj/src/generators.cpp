#include "synclab/generators.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "synclab/error.hpp"
#include "synclab/invariants.hpp"

namespace synclab {

Eigen::VectorXd random_phases(int n, double lo, double hi, Rng& rng) {
  std::uniform_real_distribution<double> u(lo, hi);
  Eigen::VectorXd th(n);
  for (int i = 0; i < n; ++i) th(i) = u(rng);
  return th;
}

Eigen::MatrixXd random_cap_points(int dim, int n, double max_angle, Rng& rng) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  Eigen::MatrixXd x(dim, n);
  const Eigen::VectorXd pole = Eigen::VectorXd::Unit(dim, dim - 1);
  for (int j = 0; j < n; ++j) {
    Eigen::VectorXd t = random_unit_vector(dim, rng);
    t -= t.dot(pole) * pole;
    t.normalize();
    const double ang = max_angle * u(rng);
    x.col(j) = std::cos(ang) * pole + std::sin(ang) * t;
  }
  return x;
}

Eigen::MatrixXd concyclic_points(int dim, int n, int on_circle, Rng& rng) {
  if (dim < 3 || on_circle > n) throw Error(ErrorCode::InvalidArgument, "concyclic_points needs dim >= 3");
  std::uniform_real_distribution<double> u(0.0, 1.0);
  Eigen::MatrixXd basis = random_sphere_points(dim, 3, rng);
  Eigen::HouseholderQR<Eigen::MatrixXd> qr(basis);
  const Eigen::MatrixXd q = qr.householderQ() * Eigen::MatrixXd::Identity(dim, 3);
  const double h = -0.6 + 1.2 * u(rng);
  const double r = std::sqrt(1.0 - h * h);
  std::vector<double> ang(static_cast<size_t>(on_circle));
  for (auto& a : ang) a = 2 * std::numbers::pi * u(rng);
  std::sort(ang.begin(), ang.end());
  Eigen::MatrixXd x = random_sphere_points(dim, n, rng);
  for (int j = 0; j < on_circle; ++j) {
    const double a = ang[static_cast<size_t>(j)];
    x.col(j) = h * q.col(2) + r * (std::cos(a) * q.col(0) + std::sin(a) * q.col(1));
  }
  return x;
}

Eigen::MatrixXd affine_section_points(int dim, int n, int m, Rng& rng) {
  if (m + 1 > dim) throw Error(ErrorCode::InvalidArgument, "affine section needs m + 1 <= dim");
  Eigen::MatrixXd g = random_sphere_points(dim, m + 1, rng);
  Eigen::HouseholderQR<Eigen::MatrixXd> qr(g);
  const Eigen::MatrixXd q = qr.householderQ() * Eigen::MatrixXd::Identity(dim, m + 1);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  const double h = -0.5 + u(rng);
  const double r = std::sqrt(1.0 - h * h);
  Eigen::MatrixXd x(dim, n);
  for (int j = 0; j < n; ++j) {
    const Eigen::VectorXd t = random_unit_vector(m, rng);
    x.col(j) = h * q.col(m) + r * (q.leftCols(m) * t);
  }
  return x;
}

Eigen::MatrixXd skew_with_op_norm(int dim, double norm, Rng& rng) {
  Eigen::MatrixXd w = random_skew(dim, rng);
  const double s = op_norm(w);
  return s == 0.0 ? w : Eigen::MatrixXd(w * (norm / s));
}

std::vector<Eigen::MatrixXcd> haar_unitaries(int n, int d, Rng& rng) {
  std::vector<Eigen::MatrixXcd> u;
  for (int j = 0; j < n; ++j) u.push_back(random_unitary(d, rng));
  return u;
}

namespace {

template <class F>
double bisect_scale(const F& measure, double target) {
  double lo = 0.0, hi = 1.0;
  while (measure(hi) < target) {
    hi *= 2;
    if (hi > 1e6) throw Error(ErrorCode::InvalidArgument, "target out of reach");
  }
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    (measure(mid) < target ? lo : hi) = mid;
    if (hi - lo < 1e-15 * hi) break;
  }
  return 0.5 * (lo + hi);
}

}  // namespace

std::vector<Eigen::MatrixXcd> unitary_cluster(int n, int d, double diameter, Rng& rng) {
  std::vector<Eigen::MatrixXcd> gen;
  for (int j = 0; j < n; ++j) gen.push_back(random_hermitian(d, rng));
  auto build = [&](double eps) {
    Eigen::MatrixXcd u(d, d * n);
    for (int j = 0; j < n; ++j) u.middleCols(j * d, d) = expi_hermitian(eps * gen[static_cast<size_t>(j)]);
    return u;
  };
  // D grows monotonically for small ε; keep the bisection on the first branch.
  const double eps = bisect_scale([&](double e) { return matrix_diameter(build(e)); }, diameter);
  const Eigen::MatrixXcd u = build(eps);
  std::vector<Eigen::MatrixXcd> out;
  for (int j = 0; j < n; ++j) out.push_back(u.middleCols(j * d, d));
  return out;
}

Eigen::MatrixXcd unitary_with_defect(int d, double defect, Rng& rng) {
  const Eigen::MatrixXcd a = random_hermitian(d, rng);
  const Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(d, d);
  const double eps = bisect_scale([&](double e) { return (expi_hermitian(e * a) - id).norm(); }, defect);
  return expi_hermitian(eps * a);
}

Eigen::MatrixXcd random_special_unitary(int d, Rng& rng) {
  const Eigen::MatrixXcd u = random_unitary(d, rng);
  const cplx det = u.determinant();
  return u * std::polar(1.0, -std::arg(det) / d);
}

}  // namespace synclab
