#include "synclab/equilibria.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numbers>

#include "synclab/dynamics.hpp"
#include "synclab/error.hpp"
#include "synclab/invariants.hpp"
#include "synclab/reduce_sphere.hpp"

namespace synclab {

std::string FiniteGroupRep::name() const {
  return (tag == GroupTag::Cyclic ? "Z" : "S") + std::to_string(order_param);
}

FiniteGroupRep cyclic_rep(int n) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "cyclic_rep needs N >= 1");
  FiniteGroupRep r;
  r.tag = GroupTag::Cyclic;
  r.order_param = n;
  r.irreducible = true;
  for (int k = 0; k < n; ++k) {
    r.elements.push_back({k});
    Eigen::MatrixXcd m(1, 1);
    m(0, 0) = std::polar(1.0, 2 * std::numbers::pi * k / n);
    r.rho.push_back(m);
    std::vector<int> row(static_cast<size_t>(n));
    for (int h = 0; h < n; ++h) row[static_cast<size_t>(h)] = (k + h) % n;
    r.table.push_back(std::move(row));
  }
  return r;
}

FiniteGroupRep symmetric_standard_rep(int n) {
  if (n < 2 || n > 6) throw Error(ErrorCode::InvalidArgument, "symmetric_standard_rep needs 2 <= n <= 6");
  FiniteGroupRep r;
  r.tag = GroupTag::Symmetric;
  r.order_param = n;
  r.irreducible = true;
  Eigen::MatrixXd basis = Eigen::MatrixXd::Zero(n, n - 1);
  for (int k = 1; k < n; ++k) {
    basis.col(k - 1).head(k).setOnes();
    basis(k, k - 1) = -k;
    basis.col(k - 1) /= std::sqrt(static_cast<double>(k * (k + 1)));
  }
  std::vector<int> p(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) p[static_cast<size_t>(i)] = i;
  std::map<std::vector<int>, int> index;
  do {
    index[p] = static_cast<int>(r.elements.size());
    r.elements.push_back(p);
    Eigen::MatrixXd perm = Eigen::MatrixXd::Zero(n, n);
    for (int i = 0; i < n; ++i) perm(p[static_cast<size_t>(i)], i) = 1.0;
    r.rho.push_back((basis.transpose() * perm * basis).cast<cplx>());
  } while (std::next_permutation(p.begin(), p.end()));
  for (const auto& g : r.elements) {
    std::vector<int> row;
    for (const auto& h : r.elements) {
      std::vector<int> gh(static_cast<size_t>(n));
      for (int i = 0; i < n; ++i) gh[static_cast<size_t>(i)] = g[static_cast<size_t>(h[static_cast<size_t>(i)])];
      row.push_back(index.at(gh));
    }
    r.table.push_back(std::move(row));
  }
  return r;
}

double homomorphism_residual(const FiniteGroupRep& rep) {
  double m = 0.0;
  for (int g = 0; g < rep.size(); ++g)
    for (int h = 0; h < rep.size(); ++h)
      m = std::max(m, (rep.rho[g] * rep.rho[h] - rep.rho[rep.table[g][h]]).norm());
  return m;
}

double rep_unitarity_residual(const FiniteGroupRep& rep) {
  double m = 0.0;
  for (const auto& r : rep.rho) m = std::max(m, unitarity_defect(r));
  return m;
}

double rep_sum_norm(const FiniteGroupRep& rep) {
  Eigen::MatrixXcd s = Eigen::MatrixXcd::Zero(rep.dim(), rep.dim());
  for (const auto& r : rep.rho) s += r;
  return s.norm();
}

UnitaryConfig rep_configuration(const FiniteGroupRep& rep, const Eigen::MatrixXcd& v, double kappa) {
  return UnitaryConfig::from_list(rep.rho, {}, kappa, v);
}

EquilibriumCheck is_equilibrium(const UnitaryConfig& cfg, double tol) {
  for (const auto& h : cfg.hs())
    if (h.norm() != 0.0) throw Error(ErrorCode::InvalidArgument, "is_equilibrium needs H = 0");
  EquilibriumCheck c;
  c.tolerance = tol * std::max(1.0, std::sqrt(static_cast<double>(cfg.d()) * cfg.n()));
  const Eigen::MatrixXcd r = lohe_matrix_rhs(cfg);
  for (int j = 0; j < cfg.n(); ++j) c.residual = std::max(c.residual, r.middleCols(j * cfg.d(), cfg.d()).norm());
  c.equilibrium = c.residual < c.tolerance;
  return c;
}

MatrixAggregationResult matrix_aggregation_check(const UnitaryConfig& cfg, double t_final,
                                                 const IntegratorSettings& st, double slack) {
  MatrixAggregationResult r;
  const int d = cfg.d();
  r.identical_h = true;
  for (const auto& h : cfg.hs()) r.identical_h = r.identical_h && (h - cfg.hs()[0]).norm() == 0.0;
  r.v_defect = (cfg.v() - Eigen::MatrixXcd::Identity(d, d)).norm();
  r.d0 = matrix_diameter(cfg.u());
  r.hypothesis = r.identical_h && r.v_defect < 2.0 / 3.0 && r.d0 < std::sqrt(2.0 - 3.0 * r.v_defect);
  const auto tr = integrate(cfg, st, t_final);
  std::vector<double> dd;
  dd.reserve(tr.size());
  for (const auto& u : tr.states) dd.push_back(matrix_diameter(u));
  const double k = cfg.kappa();
  const double lin = 2.0 - 3.0 * r.v_defect;
  auto bound = [&](double x) { return -(k / 2) * lin * x + (k / 2) * x * x * x; };
  r.worst_riccati_excess = -std::numeric_limits<double>::infinity();
  for (size_t i = 1; i < tr.size(); ++i) {
    const double rate = (dd[i] - dd[i - 1]) / (tr.times[i] - tr.times[i - 1]);
    const double excess = rate - std::max(bound(dd[i - 1]), bound(dd[i]));
    r.worst_riccati_excess = std::max(r.worst_riccati_excess, excess);
  }
  if (tr.size() < 2) r.worst_riccati_excess = 0.0;
  r.riccati_ok = r.worst_riccati_excess <= slack;
  r.d_final = dd.back();
  r.aggregated = r.d_final < 1e-4;
  r.fitted_rate = fit_decay_rate(tr.times, dd, 1e-12);
  r.verdict = !r.hypothesis ? "Unconditioned" : r.aggregated ? "Aggregated" : "NotAggregated";
  return r;
}

GLBookkeeping check_gl_identity(const UnitaryConfig& cfg) {
  GLBookkeeping b;
  const int d = cfg.d();
  const Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(d, d);
  for (int i = 0; i < cfg.n(); ++i)
    for (int j = 0; j < cfg.n(); ++j) {
      const Eigen::MatrixXcd lij = id - cfg.block(i) * cfg.block(j).adjoint();
      const Eigen::MatrixXcd lji = id - cfg.block(j) * cfg.block(i).adjoint();
      b.max_residual = std::max(b.max_residual, std::abs(lij.squaredNorm() - (lij + lji).trace()));
    }
  return b;
}

}  // namespace synclab
