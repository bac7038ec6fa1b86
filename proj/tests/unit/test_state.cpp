#include <cmath>

#include "doctest.h"
#include "helpers.hpp"
#include "synclab/error.hpp"
#include "synclab/generators.hpp"
#include "synclab/state.hpp"

using namespace synclab;
using testutil::kPi;

TEST_CASE("unit vector passes sphere validation") {
  Eigen::MatrixXd x(3, 2);
  x << 1, 0, 0, 1, 0, 0;
  CHECK(validate(SphereConfig(x, {}, 1.0, 1.0, {})).empty());
}

TEST_CASE("scaled matrix is reported non-unitary at its index") {
  Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(2, 2);
  Eigen::MatrixXcd bad = id;
  bad(0, 0) = 2.0;
  const auto cfg = UnitaryConfig::from_list({id, bad}, {}, 1.0, {});
  const auto v = validate(cfg);
  REQUIRE(v.size() == 1);
  CHECK(v[0].index == 1);
  CHECK(v[0].magnitude > 1.0);
}

TEST_CASE("symmetric W is a skew violation unless symmetrized") {
  Eigen::MatrixXd x = Eigen::MatrixXd::Identity(3, 2);
  Eigen::MatrixXd w(3, 3);
  w << 0, 1, 0, 1, 0, 0, 0, 0, 0;
  const auto raw = validate(SphereConfig(x, {}, 1.0, 1.0, w));
  REQUIRE(!raw.empty());
  CHECK(raw[0].invariant.find("skew") != std::string::npos);
  CHECK(validate(SphereConfig::make(x, {}, 1.0, 1.0, w)).empty());
}

TEST_CASE("constructors produce valid configurations") {
  Rng rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    CHECK(validate(PhaseConfig(random_phases(5, 0, 2 * kPi, rng), {}, 1.0, 0.2, Flavor::Cosine)).empty());
    CHECK(validate(SphereConfig::make(Eigen::MatrixXd::Random(4, 5), {random_skew(4, rng)}, 1.0, 0.7,
                                      random_skew(4, rng)))
              .empty());
    CHECK(validate(UnitaryConfig::make(haar_unitaries(4, 3, rng), {random_hermitian(3, rng)}, 1.0,
                                       random_unitary(3, rng)))
              .empty());
  }
}

TEST_CASE("frequency vector must have 0, 1 or N entries") {
  Eigen::VectorXd th = Eigen::VectorXd::Zero(3);
  CHECK_THROWS_AS(PhaseConfig(th, Eigen::VectorXd::Zero(2), 1.0, 0.0, Flavor::Sine), Error);
}

TEST_CASE("U(2) embedding examples") {
  SUBCASE("identity") {
    const auto e = embed_unitary2_to_sphere(Eigen::Matrix2cd::Identity());
    CHECK(e.theta == doctest::Approx(0.0));
    CHECK((e.x - Eigen::Vector4d(0, 0, 0, 1)).norm() < 1e-14);
  }
  SUBCASE("pure phase") {
    const Eigen::Matrix2cd u = std::exp(cplx(0, -kPi / 3)) * Eigen::Matrix2cd::Identity();
    const auto e = embed_unitary2_to_sphere(u);
    CHECK(e.theta == doctest::Approx(kPi / 3));
    CHECK((e.x - Eigen::Vector4d(0, 0, 0, 1)).norm() < 1e-14);
  }
  SUBCASE("i sigma_1") {
    const Eigen::Matrix2cd u = cplx(0, 1) * pauli(1);
    const auto e = embed_unitary2_to_sphere(u);
    CHECK(std::abs(e.theta) < 1e-14);
    CHECK((e.x - Eigen::Vector4d(1, 0, 0, 0)).norm() < 1e-14);
    CHECK((assemble_unitary2(e.theta, e.x) - u).cwiseAbs().maxCoeff() < 1e-14);
  }
}

TEST_CASE("U(2) embedding round-trips on random unitaries") {
  Rng rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    const Eigen::MatrixXcd u = random_unitary(2, rng);
    const auto e = embed_unitary2_to_sphere(u);
    CHECK(std::abs(e.x.norm() - 1.0) < 1e-12);
    CHECK((assemble_unitary2(e.theta, e.x) - u).cwiseAbs().maxCoeff() < 1e-10);
  }
}

TEST_CASE("embedding rejects non-unitary input") {
  Eigen::Matrix2cd m = Eigen::Matrix2cd::Identity();
  m(0, 0) = 2.0;
  CHECK_THROWS_AS(embed_unitary2_to_sphere(m), Error);
}
