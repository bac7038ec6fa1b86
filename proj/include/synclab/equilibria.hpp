#pragma once

#include <Eigen/Dense>
#include <string>
#include <vector>

#include "synclab/integrate.hpp"
#include "synclab/state.hpp"

namespace synclab {

enum class GroupTag { Cyclic, Symmetric };

struct FiniteGroupRep {
  GroupTag tag = GroupTag::Cyclic;
  int order_param = 1;                        // N for Z_N, n for S_n
  std::vector<std::vector<int>> elements;     // Z_N: {k}; S_n: one-line permutation
  std::vector<Eigen::MatrixXcd> rho;
  std::vector<std::vector<int>> table;        // table[g][h] = index of gh
  bool irreducible = false;

  int size() const { return static_cast<int>(rho.size()); }
  int dim() const { return rho.empty() ? 0 : static_cast<int>(rho[0].rows()); }
  std::string name() const;
};

// ρ(k) = e^{2πik/N} on U(1).
FiniteGroupRep cyclic_rep(int n);
// Standard (n−1)-dimensional representation of S_n, 2 ≤ n ≤ 6, elements in lexicographic order.
// Basis: b_k = (1, …, 1, −k, 0, …)/√(k(k+1)), k = 1..n−1.
FiniteGroupRep symmetric_standard_rep(int n);

double homomorphism_residual(const FiniteGroupRep& rep);  // max ‖ρ(g)ρ(h) − ρ(gh)‖_F
double rep_unitarity_residual(const FiniteGroupRep& rep);
double rep_sum_norm(const FiniteGroupRep& rep);            // ‖Σ_g ρ(g)‖_F

UnitaryConfig rep_configuration(const FiniteGroupRep& rep, const Eigen::MatrixXcd& v, double kappa = 1.0);

struct EquilibriumCheck {
  bool equilibrium = false;
  double residual = 0.0;   // max_j ‖rhs_j‖_F
  double tolerance = 0.0;  // tol · max(1, √(dN))
};

EquilibriumCheck is_equilibrium(const UnitaryConfig& cfg, double tol = 1e-10);

struct MatrixAggregationResult {
  bool aggregated = false;
  bool hypothesis = false;  // ‖V−I‖_F < 2/3 and D(U⁰) < √(2 − 3‖V−I‖_F)
  bool identical_h = false;
  double v_defect = 0.0;    // ‖V − I‖_F
  double d0 = 0.0;
  double d_final = 0.0;
  double fitted_rate = 0.0;
  double worst_riccati_excess = 0.0;  // max of discrete dD/dt − bound, must be ≤ slack
  bool riccati_ok = true;
  std::string verdict;      // Aggregated, NotAggregated or Unconditioned
};

// Riccati bound: dD/dt ≤ −(κ/2)(2 − 3‖V−I‖_F)D + (κ/2)D³, checked between recorded points
// against the larger bound of the two endpoints plus slack.
MatrixAggregationResult matrix_aggregation_check(const UnitaryConfig& cfg, double t_final,
                                                 const IntegratorSettings& st, double slack = 1e-3);

struct GLBookkeeping {
  double max_residual = 0.0;  // |‖L_ij‖_F² − tr(L_ij + L_ji)|
};
// L_ij = I − U_i U_j*, for all ordered pairs.
GLBookkeeping check_gl_identity(const UnitaryConfig& cfg);

}  // namespace synclab
