#pragma once

#include <Eigen/Dense>
#include <vector>

#include "synclab/integrate.hpp"
#include "synclab/state.hpp"

namespace synclab {

// x = (1 + cos β)/sin β = sin β/(1 − cos β), β = θ_j − θ_N.
double stereo_project_phase(double theta_j, double theta_n);

// Projection of a Sine-flavor configuration relative to its last oscillator.
// The m oscillators coincident with it (mod 2π) are moved to the end; perm[new] = old.
struct ProjectedPhaseData {
  Eigen::VectorXd x0;  // N − m projected reals
  int m = 1;
  int n = 1;
  double kappa = 0.0;
  double alpha = 0.0;  // Sine-flavor frustration
  std::vector<int> perm;
};

inline constexpr double kCoincidenceTol = 1e-12;

ProjectedPhaseData project_phase_data(const PhaseConfig& cfg);

struct ABCoefficients {
  double a;
  double b;
};

ABCoefficients ab_coefficients(const Eigen::VectorXd& x, int m, int n, double kappa, double alpha);

// (f, g) states as 2-vectors.
using FGTrajectory = Trajectory<Eigen::VectorXd>;

// Solves f' = B f, g' = A + B g from (1, 0); throws IntegratorFailure when f ≤ 0 or the
// a-priori bounds |f| ≤ e^{|κ|t}, |g| ≤ e^{|κ|t} − 1 are exceeded by more than 10%.
FGTrajectory integrate_fg(const ProjectedPhaseData& data, const IntegratorSettings& st, double t_final);

struct FGBoundCheck {
  double worst_f = 0.0;  // max |f|/e^{|κ|t}
  double worst_g = 0.0;  // max |g| − (e^{|κ|t} − 1), relative to e^{|κ|t}
  double min_f = 1.0;
  bool ok = true;        // within the 1e−6 relative / 1e−9 absolute allowance
};
FGBoundCheck check_fg_bounds(const ProjectedPhaseData& data, const FGTrajectory& fg);

struct ReconstructionError {
  double max_error = 0.0;         // |g + f x_j⁰ − x_j(t)|
  double cross_ratio_error = 0.0; // affine identity residual, relative
};

ReconstructionError reconstruct_and_compare(const PhaseTrajectory& full, const ProjectedPhaseData& data,
                                            const FGTrajectory& reduced);

enum class DichotomyVerdict { SyncR1, IncoherenceR0, Inconclusive };
const char* to_string(DichotomyVerdict v);

struct DichotomyResult {
  DichotomyVerdict verdict = DichotomyVerdict::Inconclusive;
  int branch = 0;               // 1: α ∈ (0, π/2), 2: α ∈ (−π/2, 0), 0: neither
  bool precondition = false;
  double r_final = 0.0;
  bool sum_theta_monotone = true;
  double worst_sum_theta_step = 0.0;
};

// Cosine flavor, ν = 0.
DichotomyResult dichotomy_check(const Eigen::VectorXd& theta0, double alpha, double kappa, double t_final,
                                double eps = 1e-3, const IntegratorSettings& st = {});

}  // namespace synclab
