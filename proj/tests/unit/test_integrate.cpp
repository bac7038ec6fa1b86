#include <cmath>

#include "doctest.h"
#include "helpers.hpp"
#include "synclab/error.hpp"
#include "synclab/generators.hpp"
#include "synclab/integrate.hpp"

using namespace synclab;
using testutil::kPi;
using testutil::rk4;

TEST_CASE("T_final = 0 returns the initial state") {
  const PhaseConfig c(Eigen::Vector3d(0.1, 0.2, 0.3), {}, 1.0, 0.0);
  const auto tr = integrate(c, rk4(0.01), 0.0);
  REQUIRE(tr.size() == 1);
  CHECK(tr.times[0] == 0.0);
  CHECK(tr.states[0] == c.theta());
}

TEST_CASE("invalid settings are rejected") {
  const PhaseConfig c(Eigen::Vector3d(0.1, 0.2, 0.3), {}, 1.0, 0.0);
  CHECK_THROWS_AS(integrate(c, rk4(0.0), 1.0), Error);
  CHECK_THROWS_AS(integrate(c, rk4(0.1), -1.0), Error);
  CHECK_THROWS_AS(integrate(c, rk4(0.1, Projection::Polar), 1.0), Error);
}

TEST_CASE("recorded grid ends exactly at T") {
  const PhaseConfig c(Eigen::Vector3d(0.1, 0.2, 0.3), {}, 1.0, 0.0);
  auto st = rk4(0.03);
  st.record_every = 7;
  const auto tr = integrate(c, st, 1.0);
  CHECK(tr.times.back() == 1.0);
  for (size_t k = 1; k < tr.size(); ++k) CHECK(tr.times[k] > tr.times[k - 1]);
}

TEST_CASE("two-oscillator Kuramoto matches the closed form") {
  // Sine flavor, α = 0: the difference φ = θ_2 − θ_1 obeys φ' = −κ sin φ, so
  // tan(φ/2) = tan(φ0/2) e^{−κt}.
  const double phi0 = 2.0, kappa = 1.5, t = 4.0;
  const PhaseConfig c(Eigen::Vector2d(0.0, phi0), {}, kappa, 0.0, Flavor::Sine);
  for (Scheme s : {Scheme::RK4, Scheme::DOPRI5}) {
    auto st = rk4(1e-3);
    st.scheme = s;
    const auto y = integrate(c, st, t).states.back();
    const double exact = 2 * std::atan(std::tan(phi0 / 2) * std::exp(-kappa * t));
    CHECK(std::abs((y(1) - y(0)) - exact) < 1e-9);
    CHECK(std::abs(y.sum() - phi0) < 1e-12);
  }
}

TEST_CASE("linear system is integrated exactly") {
  const Eigen::VectorXd nu = Eigen::Vector3d(0.3, -1.0, 2.0);
  auto f = [&](const Eigen::VectorXd&) { return Eigen::VectorXd(nu); };
  const auto est = convergence_order_ode(f, Eigen::VectorXd(Eigen::Vector3d::Zero()), Scheme::RK4, 1.0, 0.1);
  CHECK(est.exact);
}

TEST_CASE("observed convergence orders") {
  Rng rng(21);
  SUBCASE("RK4 on Kuramoto") {
    const PhaseConfig c(random_phases(5, 0, 2 * kPi, rng), random_phases(5, -1, 1, rng), 2.0, 0.3);
    const auto est = convergence_order(c, Scheme::RK4, 1.0, 0.1);
    CHECK(!est.exact);
    CHECK(est.p == doctest::Approx(4.0).epsilon(0.3 / 4.0));
  }
  SUBCASE("DOPRI5 on the sphere") {
    const auto c = SphereConfig::make(random_sphere_points(3, 4, rng), {random_skew(3, rng)}, 2.0, 1.0, {});
    const auto est = convergence_order(c, Scheme::DOPRI5, 1.0, 0.0125);
    CHECK(!est.exact);
    CHECK(est.p == doctest::Approx(5.0).epsilon(0.4 / 5.0));
  }
}

TEST_CASE("unprojected sphere drift scales like dt^4") {
  Rng rng(13);
  const auto c = SphereConfig::make(random_sphere_points(3, 5, rng), {random_skew(3, rng)}, 1.0, 1.0, {});
  auto drift = [&](double dt) {
    const auto tr = integrate(c, rk4(dt), 2.0);
    double m = 0.0;
    for (const auto& x : tr.states) m = std::max(m, (x.colwise().norm().array() - 1.0).abs().maxCoeff());
    return m;
  };
  const double ratio = drift(0.1) / drift(0.05);
  CHECK(ratio > 12.0);
  CHECK(ratio < 20.0);
}

TEST_CASE("projections restore the manifold") {
  Rng rng(14);
  const auto s = SphereConfig::make(random_sphere_points(3, 5, rng), {}, 1.0, 1.0, {});
  const auto ts = integrate(s, rk4(0.1, Projection::Normalize), 2.0);
  CHECK((ts.states.back().colwise().norm().array() - 1.0).abs().maxCoeff() < 1e-15);
  const auto u = UnitaryConfig::make(haar_unitaries(3, 2, rng), {random_hermitian(2, rng)}, 1.0, {});
  const auto tu = integrate(u, rk4(0.1, Projection::Polar), 2.0);
  for (int j = 0; j < 3; ++j) CHECK(unitarity_defect(tu.states.back().middleCols(2 * j, 2)) < 1e-14);
}

TEST_CASE("adaptive DOPRI5 meets its tolerance") {
  const PhaseConfig c(Eigen::Vector2d(0.0, 2.0), {}, 1.5, 0.0, Flavor::Sine);
  IntegratorSettings st;
  st.scheme = Scheme::DOPRI5;
  st.adaptive = true;
  st.dt = 0.5;
  st.rtol = 1e-10;
  st.atol = 1e-12;
  const auto y = integrate(c, st, 4.0).states.back();
  const double exact = 2 * std::atan(std::tan(1.0) * std::exp(-6.0));
  CHECK(std::abs((y(1) - y(0)) - exact) < 1e-8);
}

TEST_CASE("non-finite states are reported") {
  auto f = [](const Eigen::VectorXd& y) { return Eigen::VectorXd(y.array().square()); };
  CHECK_THROWS_AS(integrate_ode(f, Eigen::VectorXd(Eigen::VectorXd::Constant(1, 1.0)), rk4(0.1), 5.0), Error);
}

TEST_CASE("integration is deterministic") {
  Rng rng(15);
  const auto c = UnitaryConfig::make(haar_unitaries(4, 2, rng), {random_hermitian(2, rng)}, 1.0, {});
  const auto a = integrate(c, rk4(0.01, Projection::Polar), 1.0);
  const auto b = integrate(c, rk4(0.01, Projection::Polar), 1.0);
  REQUIRE(a.size() == b.size());
  for (size_t k = 0; k < a.size(); ++k) CHECK((a.states[k].array() == b.states[k].array()).all());
}
