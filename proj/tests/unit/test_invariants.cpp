#include <cmath>

#include "doctest.h"
#include "helpers.hpp"
#include "synclab/equilibria.hpp"
#include "synclab/error.hpp"
#include "synclab/generators.hpp"
#include "synclab/invariants.hpp"

using namespace synclab;
using testutil::kPi;

namespace {

Eigen::MatrixXd great_circle_square() {
  Eigen::MatrixXd x(3, 4);
  x << 1, 0, -1, 0,
       0, 1, 0, -1,
       0, 0, 0, 0;
  return x;
}

Eigen::VectorXd quarter_turns() { return Eigen::Vector4d(0, kPi / 2, kPi, 3 * kPi / 2); }

}  // namespace

TEST_CASE("functional I") {
  CHECK(functional_I(Eigen::Vector2d(0, kPi)) == doctest::Approx(-1.0));
  CHECK(functional_I(Eigen::Vector3d(0.3, 0.3, 1.0)) == 0.0);
  // With θ_{N+1} = θ_1 the closing factor is sin(−3π/4), so the sign is negative.
  CHECK(functional_I(quarter_turns()) == doctest::Approx(-0.25));
}

TEST_CASE("functional J") {
  Rng rng(1);
  const Eigen::VectorXd th = random_phases(5, 0, 2 * kPi, rng);
  CHECK(functional_J_alpha(th, 0.0) == doctest::Approx(functional_I(th)));
  CHECK(functional_J_alpha(Eigen::Vector2d(0, kPi), kPi / 4) == doctest::Approx(-std::exp(kPi)));
  CHECK_THROWS_AS(functional_J_alpha(th, kPi / 2), Error);
  const auto l = log_J_alpha(Eigen::Vector2d(0, kPi), kPi / 4);
  CHECK(l.sign == -1);
  CHECK(l.log_abs == doctest::Approx(kPi));
}

TEST_CASE("cross-ratio K") {
  CHECK(cross_ratio_K(quarter_turns(), 0, 1, 2, 3) == doctest::Approx(0.5));
  CHECK(cross_ratio_K(Eigen::Vector4d(0.2, 0.2, 1.0, 2.0), 0, 1, 2, 3) == 0.0);
  CHECK_THROWS_AS(cross_ratio_K(Eigen::Vector4d(0.2, 0.5, 0.2, 2.0), 0, 1, 2, 3), Error);
}

TEST_CASE("sphere cross-ratio H and Ptolemy residual") {
  const Eigen::MatrixXd sq = great_circle_square();
  CHECK(sphere_cross_ratio_H(sq, 0, 1, 2, 3) == doctest::Approx(0.5));
  Eigen::MatrixXd same = sq;
  same.col(1) = same.col(0);
  CHECK(sphere_cross_ratio_H(same, 0, 1, 2, 3) == 0.0);
  CHECK(std::abs(ptolemy_residual(sq, 0, 1, 2, 3)) < 1e-14);
  Eigen::MatrixXd tet(3, 4);
  tet << 1, 1, -1, -1,
         1, -1, 1, -1,
         1, -1, -1, 1;
  tet /= std::sqrt(3.0);
  // all six chords equal e, so the residual is e² + e² − e² = e² = 8/3
  CHECK(ptolemy_residual(tet, 0, 1, 2, 3) == doctest::Approx(8.0 / 3.0));
}

TEST_CASE("order parameters") {
  CHECK(order_parameter_R(Eigen::Vector3d::Constant(0.7)).r == doctest::Approx(1.0));
  CHECK(order_parameter_R(Eigen::Vector2d(0, kPi)).r < 1e-15);
  CHECK(order_parameter_R(Eigen::Vector2d(0, kPi / 2)).r == doctest::Approx(std::sqrt(0.5)));
  Eigen::MatrixXd x(3, 2);
  x.col(0) = Eigen::Vector3d(0, 0, 1);
  x.col(1) = x.col(0);
  CHECK(sphere_order_parameter(x) == doctest::Approx(1.0));
  x.col(1) = -x.col(0);
  CHECK(sphere_order_parameter(x) < 1e-15);
  x.col(1) = Eigen::Vector3d(1, 0, 0);
  CHECK(sphere_order_parameter(x) == doctest::Approx(std::sqrt(0.5)));
}

TEST_CASE("diameters") {
  Eigen::MatrixXd x(3, 2);
  x.col(0) = Eigen::Vector3d(0, 1, 0);
  x.col(1) = -x.col(0);
  CHECK(sphere_diameter(x) == doctest::Approx(8.0));
  Eigen::MatrixXd eq(3, 3);
  eq.colwise() = Eigen::Vector3d(0, 0, 1);
  CHECK(sphere_diameter(eq) == 0.0);
  CHECK(sphere_max_distance(eq) == 0.0);
  CHECK(sphere_diameter_A(eq) == 0.0);
  CHECK(phase_diameter(Eigen::Vector3d::Constant(2.0)) == 0.0);
  CHECK(matrix_diameter(testutil::side_by_side({Eigen::MatrixXcd::Identity(2, 2), Eigen::MatrixXcd::Identity(2, 2)})) ==
        0.0);
  const auto s3 = symmetric_standard_rep(3);
  CHECK(matrix_diameter(testutil::side_by_side(s3.rho)) == doctest::Approx(std::sqrt(6.0)));
}

TEST_CASE("skew-frustration product") {
  CHECK(skew_frustration_product(Eigen::Matrix2d::Identity()) == doctest::Approx(std::sqrt(2.0)));
  CHECK(skew_frustration_product(great_circle_square()) == doctest::Approx(16.0));
  CHECK(log_skew_frustration_product(great_circle_square()) == doctest::Approx(std::log(16.0)));
  CHECK_THROWS_AS(log_skew_frustration_product(Eigen::MatrixXd::Identity(2, 2).replicate(1, 2)), Error);
}

TEST_CASE("matrix cross-ratio spectrum") {
  SUBCASE("scalar case") {
    Eigen::MatrixXcd u(1, 4);
    u << 1.0, cplx(0, 1), -1.0, cplx(0, -1);
    const auto ev = matrix_cross_ratio_spectrum(u, 0, 1, 2, 3);
    REQUIRE(ev.size() == 1);
    CHECK(std::abs(ev(0) - 2.0) < 1e-14);
  }
  SUBCASE("U_i = U_k") {
    Rng rng(2);
    auto us = haar_unitaries(4, 2, rng);
    us[2] = us[0];
    const auto ev = matrix_cross_ratio_spectrum(testutil::side_by_side(us), 0, 1, 2, 3);
    CHECK(ev.cwiseAbs().maxCoeff() < 1e-14);
  }
}

TEST_CASE("drift report on a constant trajectory") {
  Rng rng(3);
  const PhaseConfig c(random_phases(5, 0, 2 * kPi, rng), {}, 1.0, 0.2, Flavor::Cosine);
  PhaseTrajectory tr;
  for (int k = 0; k < 4; ++k) {
    tr.times.push_back(k);
    tr.states.push_back(c.theta());
  }
  for (const auto& r : drift_report(c, tr, {"I", "J", "K[0,1,2,3]", "R", "sum_theta"}, 1e-12)) {
    CHECK(r.max_abs_dev == 0.0);
    CHECK(r.max_rel_dev == 0.0);
    CHECK(r.pass);
  }
}

TEST_CASE("unknown functionals are rejected") {
  CHECK(is_known_functional("phase", "K[0,1,2,3]"));
  CHECK(!is_known_functional("phase", "H[0,1,2,3]"));
  CHECK(is_known_functional("sphere", "inner[0,1]"));
  CHECK(!is_known_functional("unitary", "spectra"));
  const PhaseConfig c(Eigen::Vector3d(0, 1, 2), {}, 1.0, 0.0);
  PhaseTrajectory tr;
  tr.times = {0.0};
  tr.states = {c.theta()};
  CHECK_THROWS_AS(drift_report(c, tr, {"K[0,1,2,7]"}, 1e-6), Error);
}

TEST_CASE("drift CSV quotes bracketed names") {
  DriftReport r;
  r.name = "K[0,1,2,3]";
  const std::string csv = drift_reports_csv({r});
  CHECK(csv.rfind("name,v0,max_abs_dev,max_rel_dev,verdict\r\n", 0) == 0);
  CHECK(csv.find("\"K[0,1,2,3]\"") != std::string::npos);
}
