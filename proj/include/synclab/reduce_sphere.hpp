#pragma once

#include <Eigen/Dense>
#include <string>
#include <vector>

#include "synclab/integrate.hpp"
#include "synclab/state.hpp"

namespace synclab {

// y = x_N + (2/‖x − x_N‖²)(x − x_N); lies in the hyperplane orthogonal to x_N.
Eigen::VectorXd sphere_stereo_project(const Eigen::VectorXd& x, const Eigen::VectorXd& x_n);
// x = 2y/(1+‖y‖²) + (‖y‖²−1)/(1+‖y‖²) x_N.
Eigen::VectorXd sphere_stereo_invert(const Eigen::VectorXd& y, const Eigen::VectorXd& x_n);

// Requires V = I, Ω = 0 and x_j ≠ x_N for j < N (multiplicity one).
struct ProjectedSphereData {
  Eigen::MatrixXd y0;  // (d+1) × (N−1)
  Eigen::VectorXd x_n0;
  double kappa = 0.0;
  int n = 0;
};

ProjectedSphereData project_sphere_data(const SphereConfig& cfg);

// Stereographic states: columns 0..N−2 hold y_i, column N−1 holds x_N.
using StereoTrajectory = Trajectory<Eigen::MatrixXd>;

StereoTrajectory integrate_stereo_full(const ProjectedSphereData& data, const IntegratorSettings& st,
                                       double t_final);
// Pointwise projection of a full sphere trajectory relative to its last point.
StereoTrajectory project_sphere_trajectory(const SphereTrajectory& full);

struct ReducedSphereState {
  double a = 1.0;
  Eigen::VectorXd b;
  Eigen::MatrixXd m;
};

struct ABMTrajectory {
  std::vector<double> times;
  std::vector<ReducedSphereState> states;
  size_t size() const { return times.size(); }
};

// With update_m = false the M equation is frozen at I; (a, b) do not depend on M.
ABMTrajectory integrate_abM(const ProjectedSphereData& data, const IntegratorSettings& st, double t_final,
                            bool update_m = true);

StereoTrajectory reconstruct_abM(const ABMTrajectory& reduced, const ProjectedSphereData& data);

double max_discrepancy(const StereoTrajectory& a, const StereoTrajectory& b);

struct ABMDiagnostics {
  double max_orthogonality_defect = 0.0;  // ‖MᵀM − I‖_F
  double min_a = 0.0;
  double max_b_normal = 0.0;              // |⟨b, x_N⁰⟩|
  double inner_product_law = 0.0;         // |⟨y_i−y_j, y_k−y_l⟩(t) − a²⟨…⟩(0)|, relative
  double eight_index_identity = 0.0;      // relative
  double rho2_mismatch = 0.0;             // ρ² from (a, b) vs from reconstructed points
};

ABMDiagnostics diagnose_abM(const ABMTrajectory& reduced, const StereoTrajectory& stereo,
                            const ProjectedSphereData& data);

double rho2_from_ab(double a, const Eigen::VectorXd& b, const ProjectedSphereData& data);

enum class AggregationVerdict { Aggregated, NotAggregated, Unconditioned };
const char* to_string(AggregationVerdict v);

struct SphereAggregationResult {
  AggregationVerdict verdict = AggregationVerdict::NotAggregated;
  bool aggregated = false;
  bool hypothesis = false;        // evaluated with the operator norm
  bool hypothesis_frobenius = false;
  double w_op = 0.0;
  double w_fro = 0.0;
  double d_a0 = 0.0;              // max(1 − ⟨x_i⁰, x_j⁰⟩)
  double final_max_distance = 0.0;
  double fitted_rate = 0.0;       // decay rate of D(A)
  double predicted_rate = 0.0;    // 2κ(a − ‖W‖_op)
  bool rate_ok = false;           // fitted ≥ 0.5 × predicted
};

SphereAggregationResult sphere_aggregation_check(const SphereConfig& cfg, double t_final,
                                                 const IntegratorSettings& st);

// Least-squares slope of log D over the later half of the samples with D above floor.
double fit_decay_rate(const std::vector<double>& t, const std::vector<double>& d, double floor);

}  // namespace synclab
