#include <cmath>

#include "doctest.h"
#include "helpers.hpp"
#include "synclab/equilibria.hpp"
#include "synclab/generators.hpp"
#include "synclab/integrate.hpp"
#include "synclab/invariants.hpp"

using namespace synclab;
using testutil::kPi;
using testutil::rk4;

TEST_CASE("cyclic representations") {
  const auto z1 = cyclic_rep(1);
  CHECK(z1.size() == 1);
  CHECK(std::abs(z1.rho[0](0, 0) - 1.0) == 0.0);
  CHECK(rep_sum_norm(cyclic_rep(3)) < 1e-15);
  const auto z4 = cyclic_rep(4);
  const cplx expected[] = {1.0, cplx(0, 1), -1.0, cplx(0, -1)};
  for (int k = 0; k < 4; ++k) CHECK(std::abs(z4.rho[k](0, 0) - expected[k]) < 1e-15);
  CHECK(homomorphism_residual(z4) < 1e-15);
  CHECK(z4.table[1][3] == 0);
}

TEST_CASE("symmetric group standard representations") {
  const auto s2 = symmetric_standard_rep(2);
  REQUIRE(s2.size() == 2);
  CHECK(s2.dim() == 1);
  CHECK(std::abs(s2.rho[0](0, 0) - 1.0) < 1e-15);
  CHECK(std::abs(s2.rho[1](0, 0) + 1.0) < 1e-15);
  for (int n = 3; n <= 5; ++n) {
    const auto s = symmetric_standard_rep(n);
    CHECK(s.dim() == n - 1);
    CHECK(homomorphism_residual(s) < 1e-12);
    CHECK(rep_unitarity_residual(s) < 1e-12);
    CHECK(rep_sum_norm(s) < 1e-12);
  }
  const auto s3 = symmetric_standard_rep(3);
  CHECK(s3.size() == 6);
  CHECK(s3.elements[0] == std::vector<int>{0, 1, 2});
  CHECK(s3.elements[5] == std::vector<int>{2, 1, 0});
  CHECK(matrix_diameter(testutil::side_by_side(s3.rho)) == doctest::Approx(std::sqrt(6.0)));
  // matrices are real, so the output is reproducible bit-for-bit
  for (const auto& m : s3.rho) CHECK(m.imag().norm() == 0.0);
}

TEST_CASE("equilibrium certificates") {
  Rng rng(1);
  CHECK(is_equilibrium(rep_configuration(cyclic_rep(4), Eigen::MatrixXcd::Identity(1, 1))).residual < 1e-12);
  const auto s3 = rep_configuration(symmetric_standard_rep(3), random_unitary(2, rng));
  const auto c = is_equilibrium(s3);
  CHECK(c.equilibrium);
  CHECK(c.residual < 1e-10);
  std::vector<Eigen::MatrixXcd> ids(5, Eigen::MatrixXcd::Identity(3, 3));
  CHECK(is_equilibrium(UnitaryConfig::make(ids, {}, 1.0, {})).residual < 1e-14);
  CHECK(!is_equilibrium(UnitaryConfig::make(haar_unitaries(4, 2, rng), {}, 1.0, {})).equilibrium);
}

TEST_CASE("equilibria persist under integration") {
  auto st = rk4(1e-3, Projection::Polar);
  st.record_every = 500;
  const auto c = rep_configuration(cyclic_rep(5), Eigen::MatrixXcd::Identity(1, 1));
  const auto tr = integrate(c, st, 10.0);
  for (const auto& u : tr.states) CHECK((u - c.u()).norm() < 1e-6);
}

TEST_CASE("matrix aggregation") {
  Rng rng(2);
  auto st = rk4(1e-3, Projection::Polar);
  st.record_every = 10;
  SUBCASE("certified cluster aggregates") {
    const auto c = UnitaryConfig::make(unitary_cluster(5, 2, 1.2, rng), {random_hermitian(2, rng)}, 1.0, {});
    CHECK(matrix_diameter(c.u()) == doctest::Approx(1.2).epsilon(1e-6));
    const auto r = matrix_aggregation_check(c, 40.0, st);
    CHECK(r.hypothesis);
    CHECK(r.verdict == "Aggregated");
    CHECK(r.riccati_ok);
  }
  SUBCASE("S_3 equilibrium does not aggregate") {
    const auto c = rep_configuration(symmetric_standard_rep(3), Eigen::MatrixXcd::Identity(2, 2));
    const auto r = matrix_aggregation_check(c, 40.0, st);
    CHECK(!r.hypothesis);
    CHECK(!r.aggregated);
    CHECK(r.d_final == doctest::Approx(std::sqrt(6.0)).epsilon(1e-9));
  }
}

TEST_CASE("L_ij bookkeeping identity") {
  Rng rng(3);
  for (int d = 1; d <= 4; ++d) {
    const auto c = UnitaryConfig::make(haar_unitaries(5, d, rng), {}, 1.0, {});
    CHECK(check_gl_identity(c).max_residual < 1e-10);
  }
}
