#include <cmath>

#include "doctest.h"
#include "helpers.hpp"
#include "synclab/error.hpp"
#include "synclab/generators.hpp"
#include "synclab/integrate.hpp"
#include "synclab/reduce_kuramoto.hpp"

using namespace synclab;
using testutil::kPi;
using testutil::rk4;

TEST_CASE("phase stereographic projection") {
  CHECK(stereo_project_phase(kPi / 2, 0.0) == doctest::Approx(1.0));
  CHECK(std::abs(stereo_project_phase(kPi, 0.0)) < 1e-15);
  CHECK(stereo_project_phase(kPi / 3, 0.0) == doctest::Approx(std::sqrt(3.0)));
  CHECK(stereo_project_phase(1.1 + 2 * kPi, 0.3 - 4 * kPi) == doctest::Approx(stereo_project_phase(1.1, 0.3)));
  CHECK_THROWS_AS(stereo_project_phase(0.5, 0.5 + 2 * kPi), Error);
}

TEST_CASE("A and B coefficients") {
  SUBCASE("all coincident, alpha = 0") {
    const auto ab = ab_coefficients(Eigen::VectorXd(), 5, 5, 1.3, 0.0);
    CHECK(ab.a == doctest::Approx(0.0));
    CHECK(ab.b == doctest::Approx(1.3));
  }
  SUBCASE("alpha = pi/2, x = 0") {
    const int n = 5;
    const auto ab = ab_coefficients(Eigen::VectorXd::Zero(1), n - 1, n, 2.0, kPi / 2);
    CHECK(ab.a == doctest::Approx(2.0 * (n - 2) / n));
    CHECK(std::abs(ab.b) < 1e-15);
  }
  SUBCASE("bounded by kappa") {
    Rng rng(1);
    for (int trial = 0; trial < 200; ++trial) {
      const Eigen::VectorXd x = 10.0 * Eigen::VectorXd::Random(4);
      const double alpha = random_phases(1, -kPi / 2, kPi / 2, rng)(0);
      const auto ab = ab_coefficients(x, 2, 6, 1.7, alpha);
      CHECK(std::abs(ab.a) <= 1.7 + 1e-12);
      CHECK(std::abs(ab.b) <= 1.7 + 1e-12);
    }
  }
}

TEST_CASE("(f, g) for a frozen flow and a fully coincident state") {
  Rng rng(2);
  const PhaseConfig frozen(random_phases(4, 0, 2 * kPi, rng), {}, 0.0, 0.4, Flavor::Sine);
  const auto fg0 = integrate_fg(project_phase_data(frozen), rk4(0.01), 2.0);
  for (const auto& s : fg0.states) {
    CHECK(s(0) == doctest::Approx(1.0));
    CHECK(s(1) == doctest::Approx(0.0));
  }
  // All oscillators at one phase: A = κ sin α, B = κ cos α, so f = e^{Bt}, g = (A/B)(e^{Bt} − 1).
  const double kappa = 1.2, alpha = 0.4, t = 1.5;
  const PhaseConfig same(Eigen::VectorXd::Constant(4, 0.9), {}, kappa, alpha, Flavor::Sine);
  const auto data = project_phase_data(same);
  CHECK(data.m == 4);
  const auto s = integrate_fg(data, rk4(1e-3), t).states.back();
  const double b = kappa * std::cos(alpha), a = kappa * std::sin(alpha);
  CHECK(s(0) == doctest::Approx(std::exp(b * t)).epsilon(1e-12));
  CHECK(s(1) == doctest::Approx(a / b * (std::exp(b * t) - 1)).epsilon(1e-12));
}

TEST_CASE("reconstruction of the full flow") {
  Rng rng(3);
  SUBCASE("T = 0") {
    const PhaseConfig c(random_phases(5, 0, 2 * kPi, rng), {}, 1.0, 0.3, Flavor::Sine);
    const auto data = project_phase_data(c);
    const auto err = reconstruct_and_compare(integrate(c, rk4(1e-3), 0.0), data, integrate_fg(data, rk4(1e-3), 0.0));
    CHECK(err.max_error == 0.0);
  }
  for (double alpha : {0.3, kPi / 2}) {
    const int n = alpha == 0.3 ? 5 : 4;
    const PhaseConfig c(random_phases(n, 0, 2 * kPi, rng), {}, 1.0, alpha, Flavor::Sine);
    const auto data = project_phase_data(c);
    const auto err = reconstruct_and_compare(integrate(c, rk4(1e-3), 3.0), data, integrate_fg(data, rk4(1e-3), 3.0));
    CHECK(err.max_error < 1e-5);
    CHECK(err.cross_ratio_error < 1e-6);
  }
}

TEST_CASE("reconstruction error shrinks like dt^4") {
  Rng rng(4);
  const PhaseConfig c(random_phases(6, 0, 2 * kPi, rng), {}, 1.0, 0.4, Flavor::Sine);
  const auto data = project_phase_data(c);
  auto err = [&](double dt) {
    return reconstruct_and_compare(integrate(c, rk4(dt), 3.0), data, integrate_fg(data, rk4(dt), 3.0)).max_error;
  };
  const double ratio = err(0.1) / err(0.05);
  CHECK(ratio > 12.0);
  CHECK(ratio < 20.0);
}

TEST_CASE("a-priori bounds on f and g") {
  Rng rng(5);
  for (int trial = 0; trial < 10; ++trial) {
    const PhaseConfig c(random_phases(6, 0, 2 * kPi, rng), {}, 1.0, random_phases(1, -kPi / 2, kPi / 2, rng)(0),
                        Flavor::Sine);
    const auto data = project_phase_data(c);
    const auto b = check_fg_bounds(data, integrate_fg(data, rk4(1e-3), 3.0));
    CHECK(b.ok);
    CHECK(b.min_f > 0.0);
  }
}

TEST_CASE("mismatched grids are rejected") {
  const PhaseConfig c(Eigen::Vector3d(0.1, 1.0, 2.0), {}, 1.0, 0.0, Flavor::Sine);
  const auto data = project_phase_data(c);
  CHECK_THROWS_AS(reconstruct_and_compare(integrate(c, rk4(0.01), 1.0), data, integrate_fg(data, rk4(0.02), 1.0)),
                  Error);
}

TEST_CASE("dichotomy") {
  SUBCASE("single oscillator is synchronized") {
    const auto r = dichotomy_check(Eigen::VectorXd::Constant(1, 0.3), 0.5, 1.0, 1.0);
    CHECK(r.verdict == DichotomyVerdict::SyncR1);
  }
  SUBCASE("positive frustration, narrow arc") {
    Rng rng(6);
    auto st = rk4(1e-3);
    st.record_every = 10;
    const auto r = dichotomy_check(random_phases(6, 0.0, 0.9, rng), 0.5, 1.0, 60.0, 1e-3, st);
    CHECK(r.branch == 1);
    CHECK(r.precondition);
    CHECK(r.verdict == DichotomyVerdict::SyncR1);
  }
  SUBCASE("negative frustration") {
    Rng rng(7);
    auto st = rk4(1e-3);
    st.record_every = 10;
    const auto r = dichotomy_check(random_phases(6, 0.0, 2 * kPi, rng), -0.5, 1.0, 200.0, 1e-3, st);
    CHECK(r.branch == 2);
    CHECK(r.verdict == DichotomyVerdict::IncoherenceR0);
    CHECK(r.sum_theta_monotone);
  }
}
