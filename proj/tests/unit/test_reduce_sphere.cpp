#include <cmath>

#include "doctest.h"
#include "helpers.hpp"
#include "synclab/error.hpp"
#include "synclab/generators.hpp"
#include "synclab/integrate.hpp"
#include "synclab/invariants.hpp"
#include "synclab/reduce_sphere.hpp"

using namespace synclab;
using testutil::rk4;

TEST_CASE("sphere stereographic projection") {
  const Eigen::Vector3d n(0, 0, 1);
  CHECK(sphere_stereo_project(-n, n).norm() < 1e-15);
  const Eigen::Vector3d e1(1, 0, 0);
  CHECK((sphere_stereo_project(e1, n) - e1).norm() < 1e-15);
  CHECK_THROWS_AS(sphere_stereo_project(n, n), Error);
  CHECK((sphere_stereo_invert(Eigen::Vector3d::Zero(), n) + n).norm() < 1e-15);
  CHECK((sphere_stereo_invert(Eigen::Vector3d(1e8, 0, 0), n) - n).norm() < 1e-7);
  CHECK((sphere_stereo_invert(e1, n) - e1).norm() < 1e-15);
  CHECK_THROWS_AS(sphere_stereo_invert(Eigen::Vector3d(1, 0, 1), n), Error);
  Rng rng(1);
  for (int trial = 0; trial < 100; ++trial) {
    const Eigen::VectorXd p = random_unit_vector(4, rng);
    const Eigen::VectorXd x = random_unit_vector(4, rng);
    CHECK((sphere_stereo_invert(sphere_stereo_project(x, p), p) - x).norm() < 1e-10);
  }
}

TEST_CASE("reduction needs V = I and Omega = 0") {
  Rng rng(2);
  const Eigen::MatrixXd x = random_sphere_points(3, 4, rng);
  CHECK_THROWS_AS(project_sphere_data(SphereConfig::make(x, {random_skew(3, rng)}, 1.0, 1.0, {})), Error);
  CHECK_THROWS_AS(project_sphere_data(SphereConfig::make(x, {}, 1.0, 0.9, {})), Error);
}

TEST_CASE("frozen reduced flows") {
  Rng rng(3);
  const auto c = SphereConfig::make(random_sphere_points(3, 4, rng), {}, 0.0, 1.0, {});
  const auto data = project_sphere_data(c);
  const auto st = integrate_stereo_full(data, rk4(0.01), 1.0);
  CHECK((st.states.back() - st.states.front()).norm() < 1e-14);
  const auto r = integrate_abM(data, rk4(0.01), 1.0);
  CHECK(r.states.back().a == 1.0);
  CHECK(r.states.back().b.norm() == 0.0);
  CHECK((r.states.back().m - Eigen::MatrixXd::Identity(3, 3)).norm() == 0.0);
}

TEST_CASE("N = 2 with one particle at the antipode") {
  // y_1 = 0 and b(0) = 0: b stays 0 and a' = 0 for all time.
  Eigen::MatrixXd x(3, 2);
  x.col(0) = Eigen::Vector3d(0, 0, -1);
  x.col(1) = Eigen::Vector3d(0, 0, 1);
  const auto data = project_sphere_data(SphereConfig(x, {}, 1.0, 1.0, {}));
  const auto r = integrate_abM(data, rk4(0.01), 2.0);
  for (const auto& s : r.states) {
    CHECK(s.b.norm() < 1e-15);
    CHECK(s.a == doctest::Approx(1.0));
  }
}

TEST_CASE("three-way agreement of the reduction chain") {
  Rng rng(4);
  const auto c = SphereConfig::make(random_sphere_points(3, 5, rng), {}, 1.0, 1.0, {});
  const auto data = project_sphere_data(c);
  auto run = [&](double dt, bool diagnose) {
    const auto full = project_sphere_trajectory(integrate(c, rk4(dt), 3.0));
    const auto stereo = integrate_stereo_full(data, rk4(dt), 3.0);
    const auto abm = integrate_abM(data, rk4(dt), 3.0);
    const auto recon = reconstruct_abM(abm, data);
    if (diagnose) {
      const auto diag = diagnose_abM(abm, stereo, data);
      CHECK(diag.max_orthogonality_defect < 1e-8);
      CHECK(diag.min_a > 0.0);
      CHECK(diag.max_b_normal < 1e-10);
      CHECK(diag.rho2_mismatch < 1e-8);
    }
    return std::max({max_discrepancy(full, stereo), max_discrepancy(stereo, recon), max_discrepancy(full, recon)});
  };
  const double fine = run(1e-3, true);
  CHECK(fine < 1e-4);
  const double ratio = run(0.1, false) / run(0.05, false);
  CHECK(ratio > 10.0);
  CHECK(ratio < 22.0);
}

TEST_CASE("t = 0 reconstruction is exact") {
  Rng rng(5);
  const auto c = SphereConfig::make(random_sphere_points(4, 5, rng), {}, 1.0, 1.0, {});
  const auto data = project_sphere_data(c);
  const auto recon = reconstruct_abM(integrate_abM(data, rk4(0.01), 0.0), data);
  CHECK(max_discrepancy(recon, project_sphere_trajectory(integrate(c, rk4(0.01), 0.0))) < 1e-14);
}

TEST_CASE("aggregation verdicts") {
  Rng rng(6);
  auto st = rk4(1e-3, Projection::Normalize);
  st.record_every = 10;
  const auto tight = SphereConfig::make(random_cap_points(3, 6, 0.3, rng), {}, 1.0, 1.0, {});
  const auto r = sphere_aggregation_check(tight, 30.0, st);
  CHECK(r.verdict == AggregationVerdict::Aggregated);
  CHECK(r.rate_ok);
  // Points spread over the whole sphere fall outside the hypothesis.
  const auto wide = SphereConfig::make(random_sphere_points(3, 6, rng), {}, 1.0, 1.0, {});
  CHECK(sphere_aggregation_check(wide, 1.0, st).verdict == AggregationVerdict::Unconditioned);
}

TEST_CASE("decay-rate fit recovers an exponential") {
  std::vector<double> t, d;
  for (int k = 0; k <= 100; ++k) {
    t.push_back(0.1 * k);
    d.push_back(3.0 * std::exp(-1.7 * t.back()));
  }
  CHECK(fit_decay_rate(t, d, 1e-30) == doctest::Approx(1.7));
}

TEST_CASE("sphere flow properties") {
  Rng rng(7);
  SUBCASE("no periodic orbits: D_M strictly decreases off equilibria") {
    const auto c = SphereConfig::make(random_sphere_points(3, 6, rng), {}, 1.0, 1.0, {});
    auto st = rk4(1e-3, Projection::Normalize);
    st.record_every = 100;
    const auto tr = integrate(c, st, 3.0);
    for (size_t k = 1; k < tr.size(); ++k) CHECK(sphere_diameter(tr.states[k]) < sphere_diameter(tr.states[k - 1]));
  }
  SUBCASE("affine sections stay affine") {
    const Eigen::MatrixXd x0 = affine_section_points(4, 6, 2, rng);
    const Eigen::MatrixXd om = random_skew(4, rng);
    const auto c = SphereConfig::make(x0, {om}, 1.0, 1.0, {});
    const auto tr = integrate(c, rk4(1e-3, Projection::Normalize), 3.0);
    for (const auto& x : tr.states) {
      const Eigen::MatrixXd centered = x.colwise() - x.rowwise().mean();
      const Eigen::JacobiSVD<Eigen::MatrixXd> svd(centered);
      // a 2-plane section: the centered points span two directions
      CHECK(svd.singularValues()(2) < 1e-7);
    }
  }
}
