#pragma once

#include <numbers>

#include "synclab/integrate.hpp"
#include "synclab/linalg.hpp"

namespace testutil {

inline constexpr double kPi = std::numbers::pi;

inline synclab::IntegratorSettings rk4(double dt, synclab::Projection p = synclab::Projection::None) {
  synclab::IntegratorSettings st;
  st.scheme = synclab::Scheme::RK4;
  st.dt = dt;
  st.projection = p;
  return st;
}

inline Eigen::MatrixXcd side_by_side(const std::vector<Eigen::MatrixXcd>& blocks) {
  const Eigen::Index d = blocks.front().rows();
  Eigen::MatrixXcd u(d, d * static_cast<Eigen::Index>(blocks.size()));
  for (size_t j = 0; j < blocks.size(); ++j) u.middleCols(static_cast<Eigen::Index>(j) * d, d) = blocks[j];
  return u;
}

}  // namespace testutil
