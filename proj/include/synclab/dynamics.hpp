#pragma once

#include <Eigen/Dense>

#include "synclab/state.hpp"

namespace synclab {

using TangentPhase = Eigen::VectorXd;
using TangentSphere = Eigen::MatrixXd;
using TangentUnitary = Eigen::MatrixXcd;

TangentPhase kuramoto_rhs(const PhaseConfig& cfg);
TangentPhase kuramoto_rhs(const PhaseConfig& params, const Eigen::VectorXd& theta);

// dx_i = Ω_i x_i + κ(V x_c − ⟨x_i, V x_c⟩ x_i), x_c the centroid.
TangentSphere sphere_rhs(const SphereConfig& cfg);
TangentSphere sphere_rhs(const SphereConfig& params, const Eigen::MatrixXd& x);

// dU_j = −iH_j U_j + (κ/2)(V U_c − U_j (V U_c)* U_j), U_c the centroid.
TangentUnitary lohe_matrix_rhs(const UnitaryConfig& cfg);
TangentUnitary lohe_matrix_rhs(const UnitaryConfig& params, const Eigen::MatrixXcd& u);

UnitaryConfig right_translate(const UnitaryConfig& cfg, const Eigen::MatrixXcd& l,
                              double tol = kUnitaryTol);
// Pushes a tangent vector through U_j -> U_j L.
TangentUnitary translate_tangent(const TangentUnitary& du, const Eigen::MatrixXcd& l);

// Left multiplication by V ∈ SU(2) on the coordinates of quaternion_coords.
Eigen::Matrix4d frustration_matrix4(const Eigen::Vector4d& v);
// Skew 4×4 generator induced by −i(H − ν I) on those coordinates.
Eigen::Matrix4d omega_from_hamiltonian(const Eigen::Matrix2cd& h);

// Max discrepancy between the (θ, x) frustrated system and the pushed-forward matrix rhs.
double reduce_matrix_to_sphere_check(const UnitaryConfig& cfg);

}  // namespace synclab
