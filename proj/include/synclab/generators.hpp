#pragma once

#include <Eigen/Dense>
#include <vector>

#include "synclab/linalg.hpp"

namespace synclab {

Eigen::VectorXd random_phases(int n, double lo, double hi, Rng& rng);

// Points within geodesic angle max_angle of the last basis vector.
Eigen::MatrixXd random_cap_points(int dim, int n, double max_angle, Rng& rng);

// The first on_circle points lie, in angular order, on a random circle of S^d (a plane section,
// generally not a great circle); the rest are uniform.
Eigen::MatrixXd concyclic_points(int dim, int n, int on_circle, Rng& rng);

// Points on the section of S^d by a random affine plane of dimension m (m+1 ≤ dim).
Eigen::MatrixXd affine_section_points(int dim, int n, int m, Rng& rng);

Eigen::MatrixXd skew_with_op_norm(int dim, double norm, Rng& rng);

std::vector<Eigen::MatrixXcd> haar_unitaries(int n, int d, Rng& rng);

// exp(iεA_j) with random Hermitian A_j and ε chosen by bisection so that D(U) = diameter.
std::vector<Eigen::MatrixXcd> unitary_cluster(int n, int d, double diameter, Rng& rng);

// exp(iεA), A random Hermitian, with ‖V − I‖_F = defect.
Eigen::MatrixXcd unitary_with_defect(int d, double defect, Rng& rng);

// Uniform on SU(d): Haar unitary divided by a d-th root of its determinant.
Eigen::MatrixXcd random_special_unitary(int d, Rng& rng);

}  // namespace synclab
