#pragma once

// Right-hand sides templated on the real scalar. The public API uses double; the
// convergence-order estimates run in long double so that fine step sizes stay above roundoff.

#include <Eigen/Dense>
#include <complex>

#include "synclab/state.hpp"

namespace synclab::detail {

template <class R>
using VecR = Eigen::Matrix<R, Eigen::Dynamic, 1>;
template <class R>
using MatR = Eigen::Matrix<R, Eigen::Dynamic, Eigen::Dynamic>;
template <class R>
using CMatR = Eigen::Matrix<std::complex<R>, Eigen::Dynamic, Eigen::Dynamic>;

template <class R>
VecR<R> kuramoto_rhs_t(const PhaseConfig& params, const VecR<R>& theta) {
  // Σ_k sin(θ_k − θ_j + α) = Im(e^{i(α−θ_j)} Σ_k e^{iθ_k}); O(N) via the order parameter.
  const Eigen::Index n = theta.size();
  std::complex<R> z(0, 0);
  for (Eigen::Index k = 0; k < n; ++k) z += std::polar(R(1), theta(k));
  const R alpha = params.sine_alpha();
  const R c = R(params.kappa()) / static_cast<R>(n);
  VecR<R> out(n);
  for (Eigen::Index j = 0; j < n; ++j)
    out(j) = R(params.nu()(j)) + c * (std::polar(R(1), alpha - theta(j)) * z).imag();
  return out;
}

template <class R>
MatR<R> sphere_rhs_t(const SphereConfig& params, const MatR<R>& x) {
  const VecR<R> vc = params.v().cast<R>() * x.rowwise().mean();
  const R kappa = params.kappa();
  MatR<R> out(x.rows(), x.cols());
  for (Eigen::Index i = 0; i < x.cols(); ++i) {
    auto xi = x.col(i);
    out.col(i) = params.omega(static_cast<int>(i)).template cast<R>() * xi + kappa * (vc - xi.dot(vc) * xi);
  }
  return out;
}

template <class R>
CMatR<R> lohe_matrix_rhs_t(const UnitaryConfig& params, const CMatR<R>& u) {
  using C = std::complex<R>;
  const Eigen::Index d = u.rows();
  const Eigen::Index n = u.cols() / d;
  CMatR<R> uc = CMatR<R>::Zero(d, d);
  for (Eigen::Index k = 0; k < n; ++k) uc += u.middleCols(k * d, d);
  uc /= static_cast<R>(n);
  const CMatR<R> s = params.v().cast<C>() * uc;
  const CMatR<R> sa = s.adjoint();
  const C mi(0, -1);
  const C half(R(0.5) * R(params.kappa()), 0);
  CMatR<R> out(d, u.cols());
  for (Eigen::Index j = 0; j < n; ++j) {
    auto uj = u.middleCols(j * d, d);
    out.middleCols(j * d, d) = mi * params.h(static_cast<int>(j)).template cast<C>() * uj + half * (s - uj * sa * uj);
  }
  return out;
}

}  // namespace synclab::detail
