#pragma once

#include <Eigen/Dense>
#include <array>
#include <string>
#include <vector>

#include "synclab/integrate.hpp"
#include "synclab/state.hpp"

namespace synclab {

// ∏_i sin((θ_{i+1} − θ_i)/2), cyclic.
double functional_I(const Eigen::VectorXd& theta);

struct SignedLog {
  int sign = 0;  // 0 when the value is exactly zero
  double log_abs = 0.0;
  double value() const;
};

// I(θ)·exp(tan α Σθ) carried as sign and log-magnitude.
SignedLog log_J_alpha(const Eigen::VectorXd& theta, double alpha);
double functional_J_alpha(const Eigen::VectorXd& theta, double alpha);

using Quad = std::array<int, 4>;

double cross_ratio_K(const Eigen::VectorXd& theta, int a, int b, int c, int d);
double sphere_cross_ratio_H(const Eigen::MatrixXd& x, int a, int b, int c, int d);
double ptolemy_residual(const Eigen::MatrixXd& x, int a, int b, int c, int d);

struct OrderParameter {
  double r;
  double phi;
};
OrderParameter order_parameter_R(const Eigen::VectorXd& theta);
double sphere_order_parameter(const Eigen::MatrixXd& x);

double phase_diameter(const Eigen::VectorXd& theta);   // θ_max − θ_min
double sphere_diameter(const Eigen::MatrixXd& x);      // Σ_{i,j} ‖x_i − x_j‖²
double sphere_max_distance(const Eigen::MatrixXd& x);  // max_{i,j} ‖x_i − x_j‖
double sphere_diameter_A(const Eigen::MatrixXd& x);    // max_{i,j} (1 − ⟨x_i, x_j⟩)
double matrix_diameter(const Eigen::MatrixXcd& u);     // max_{i,j} ‖U_i − U_j‖_F

double skew_frustration_product(const Eigen::MatrixXd& x);
double log_skew_frustration_product(const Eigen::MatrixXd& x);

// Eigenvalues of (U_i−U_k)(U_i−U_l)^{-1}(U_j−U_l)(U_j−U_k)^{-1}, sorted by (re, im). Drift reports compare
// spectra as multisets (best matching), since the sort order flips when real parts nearly tie.
// u holds the blocks side by side.
Eigen::VectorXcd matrix_cross_ratio_spectrum(const Eigen::MatrixXcd& u, int i, int j, int k, int l);

enum class FunctionalKind { Conserved, NonIncreasing, NonDecreasing, Observed };
const char* to_string(FunctionalKind k);

struct DriftReport {
  std::string name;
  FunctionalKind kind = FunctionalKind::Conserved;
  double v0 = 0.0;
  double max_abs_dev = 0.0;  // monotone kinds: largest step against the expected direction
  double max_rel_dev = 0.0;
  double tolerance = 0.0;
  bool pass = true;

  std::string verdict() const;
};

// Names: I, J, K[a,b,c,d], R, phi, sum_theta, D_theta.
std::vector<DriftReport> drift_report(const PhaseConfig& cfg, const PhaseTrajectory& tr,
                                      const std::vector<std::string>& names, double tol);
// Names: H[a,b,c,d], ptolemy[a,b,c,d], rho, rho2, D_M, D_A, max_dist, skew_product, inner[i,j], norm_defect.
std::vector<DriftReport> drift_report(const SphereConfig& cfg, const SphereTrajectory& tr,
                                      const std::vector<std::string>& names, double tol);
// Names: D_U, unitarity_defect, spectrum[i,j,k,l], equilibrium_residual.
std::vector<DriftReport> drift_report(const UnitaryConfig& cfg, const UnitaryTrajectory& tr,
                                      const std::vector<std::string>& names, double tol);

// Scalar time series of registered functionals at the recorded points. Spectra expand to
// name#re<k> and name#im<k>.
void record_observables(const PhaseConfig& cfg, PhaseTrajectory& tr, const std::vector<std::string>& names);
void record_observables(const SphereConfig& cfg, SphereTrajectory& tr, const std::vector<std::string>& names);
void record_observables(const UnitaryConfig& cfg, UnitaryTrajectory& tr, const std::vector<std::string>& names);

bool is_known_functional(const std::string& model, const std::string& name);

std::string drift_reports_csv(const std::vector<DriftReport>& reports);

// "K[0,1,2,3]" -> ("K", {0,1,2,3}); names without brackets give an empty list.
struct ParsedName {
  std::string base;
  std::vector<int> args;
};
ParsedName parse_functional_name(const std::string& name);

}  // namespace synclab
