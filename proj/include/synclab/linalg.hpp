#pragma once

#include <Eigen/Dense>
#include <complex>
#include <cstdint>
#include <random>

namespace synclab {

using cplx = std::complex<double>;
using Rng = std::mt19937_64;

inline constexpr const char* kRngName = "mt19937_64";

Eigen::MatrixXd skew_part(const Eigen::MatrixXd& a);
Eigen::MatrixXcd hermitian_part(const Eigen::MatrixXcd& a);

// Unitary factor of the polar decomposition, Newton iteration U <- (U + U^{-*})/2.
Eigen::MatrixXcd polar_unitary(const Eigen::MatrixXcd& a, double tol = 1e-14, int max_iter = 50);
Eigen::MatrixXd polar_orthogonal(const Eigen::MatrixXd& a, double tol = 1e-14, int max_iter = 50);

// Spectral norm via power iteration on A^T A.
double op_norm(const Eigen::MatrixXd& a, int max_iter = 500, double tol = 1e-14);

double unitarity_defect(const Eigen::MatrixXcd& u);  // ||U U* - I||_F
double orthogonality_defect(const Eigen::MatrixXd& m);  // ||M^T M - I||_F

// Haar-distributed unitary: QR of a complex Gaussian matrix with phase-fixed R.
Eigen::MatrixXcd random_unitary(int d, Rng& rng);
Eigen::MatrixXcd random_hermitian(int d, Rng& rng);
Eigen::MatrixXd random_skew(int d, Rng& rng);
Eigen::VectorXd random_unit_vector(int dim, Rng& rng);
Eigen::MatrixXd random_sphere_points(int dim, int n, Rng& rng);  // one point per column

// Matrix exponential of i*A for Hermitian A, via eigendecomposition.
Eigen::MatrixXcd expi_hermitian(const Eigen::MatrixXcd& a);

}  // namespace synclab
