#include <cmath>

#include "doctest.h"
#include "helpers.hpp"
#include "synclab/dynamics.hpp"
#include "synclab/error.hpp"
#include "synclab/generators.hpp"

using namespace synclab;
using testutil::kPi;

namespace {

// Direct O(N^2) sums, independent of the order-parameter evaluation.
Eigen::VectorXd kuramoto_direct(const PhaseConfig& c) {
  const int n = c.n();
  Eigen::VectorXd d(n);
  for (int j = 0; j < n; ++j) {
    double s = 0.0;
    for (int k = 0; k < n; ++k) {
      s += c.flavor() == Flavor::Sine ? std::sin(c.theta()(k) - c.theta()(j) + c.alpha())
                                      : std::cos(c.theta()(j) - c.theta()(k) + c.alpha());
    }
    d(j) = (c.nu().size() ? c.nu()(j) : 0.0) + c.kappa() / n * s;
  }
  return d;
}

}  // namespace

TEST_CASE("Kuramoto rhs examples") {
  SUBCASE("antipodal pair is stationary") {
    const PhaseConfig c(Eigen::Vector2d(0, kPi), {}, 1.0, 0.0, Flavor::Sine);
    CHECK(kuramoto_rhs(c).cwiseAbs().maxCoeff() < 1e-15);
  }
  SUBCASE("two-term sum") {
    const PhaseConfig c(Eigen::Vector2d(0, kPi / 2), {}, 2.0, 0.0, Flavor::Sine);
    const auto d = kuramoto_rhs(c);
    CHECK(d(0) == doctest::Approx(1.0));
    CHECK(d(1) == doctest::Approx(-1.0));
  }
  SUBCASE("single cosine oscillator") {
    const PhaseConfig c(Eigen::VectorXd::Constant(1, 0.4), {}, 1.0, kPi / 3, Flavor::Cosine);
    CHECK(kuramoto_rhs(c)(0) == doctest::Approx(0.5));
  }
}

TEST_CASE("Kuramoto rhs matches the pairwise sum") {
  Rng rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    const Flavor f = trial % 2 ? Flavor::Sine : Flavor::Cosine;
    const PhaseConfig c(random_phases(7, -5, 5, rng), random_phases(7, -1, 1, rng), 1.3, 0.3 * (trial % 5) - 0.6, f);
    CHECK((kuramoto_rhs(c) - kuramoto_direct(c)).cwiseAbs().maxCoeff() < 1e-13);
  }
}

TEST_CASE("sphere rhs examples") {
  SUBCASE("single particle without rotation") {
    const SphereConfig c(Eigen::Vector3d(0, 0, 1), {}, 1.0, 1.0, {});
    CHECK(sphere_rhs(c).norm() == 0.0);
  }
  SUBCASE("orthonormal pair on the circle") {
    const SphereConfig c(Eigen::Matrix2d::Identity(), {}, 1.0, 1.0, {});
    const auto d = sphere_rhs(c);
    CHECK((d.col(0) - Eigen::Vector2d(0, 0.5)).norm() < 1e-15);
    CHECK((d.col(1) - Eigen::Vector2d(0.5, 0)).norm() < 1e-15);
  }
  SUBCASE("pure skew coupling keeps the inner product of a pair") {
    Eigen::Matrix2d w;
    w << 0, -1, 1, 0;
    const SphereConfig c(Eigen::Matrix2d::Identity(), {}, 1.0, 0.0, w);
    const auto d = sphere_rhs(c);
    CHECK(std::abs(d.col(0).dot(c.x().col(1)) + c.x().col(0).dot(d.col(1))) < 1e-15);
  }
}

TEST_CASE("sphere rhs is tangent") {
  Rng rng(8);
  for (int trial = 0; trial < 100; ++trial) {
    const int dim = 2 + trial % 4;
    const auto c = SphereConfig::make(random_sphere_points(dim, 5, rng), {random_skew(dim, rng)}, 1.0, 0.8,
                                      random_skew(dim, rng));
    const auto d = sphere_rhs(c);
    for (int i = 0; i < c.n(); ++i) CHECK(std::abs(d.col(i).dot(c.x().col(i))) < 1e-12);
  }
}

TEST_CASE("matrix rhs: aggregated state is stationary") {
  Rng rng(1);
  const Eigen::MatrixXcd u = random_unitary(3, rng);
  const auto c = UnitaryConfig::make({u, u, u, u}, {}, 1.0, Eigen::MatrixXcd::Identity(3, 3));
  CHECK(lohe_matrix_rhs(c).cwiseAbs().maxCoeff() < 1e-15);
}

TEST_CASE("matrix rhs preserves unitarity to first order") {
  Rng rng(2);
  for (int trial = 0; trial < 100; ++trial) {
    const int d = 1 + trial % 4;
    std::vector<Eigen::MatrixXcd> hs;
    for (int j = 0; j < 4; ++j) hs.push_back(random_hermitian(d, rng));
    const auto c = UnitaryConfig::make(haar_unitaries(4, d, rng), hs, 1.2, random_unitary(d, rng));
    const auto du = lohe_matrix_rhs(c);
    for (int j = 0; j < 4; ++j) {
      const Eigen::MatrixXcd u = c.block(j);
      const Eigen::MatrixXcd dj = du.middleCols(j * d, d);
      CHECK((dj * u.adjoint() + u * dj.adjoint()).norm() < 1e-10);
    }
  }
}

TEST_CASE("d = 1 matrix model is the sine Kuramoto model") {
  Rng rng(4);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 5;
    const Eigen::VectorXd th = random_phases(n, 0, 2 * kPi, rng);
    const Eigen::VectorXd nu = random_phases(n, -1, 1, rng);
    const double alpha = random_phases(1, -1.5, 1.5, rng)(0);
    std::vector<Eigen::MatrixXcd> u, h;
    for (int j = 0; j < n; ++j) {
      u.push_back(Eigen::MatrixXcd::Constant(1, 1, std::exp(cplx(0, -th(j)))));
      h.push_back(Eigen::MatrixXcd::Constant(1, 1, nu(j)));
    }
    // V = e^{-iα} turns the matrix coupling into sin(θ_k − θ_j + α).
    const auto c = UnitaryConfig::make(u, h, 0.9, Eigen::MatrixXcd::Constant(1, 1, std::exp(cplx(0, -alpha))));
    const auto du = lohe_matrix_rhs(c);
    const Eigen::VectorXd dth = kuramoto_rhs(PhaseConfig(th, nu, 0.9, alpha, Flavor::Sine));
    for (int j = 0; j < n; ++j) {
      // U = e^{-iθ}: dU = −i θ' U
      const cplx expected = cplx(0, -dth(j)) * u[j](0, 0);
      CHECK(std::abs(du(0, j) - expected) < 1e-12);
    }
  }
}

TEST_CASE("right translation") {
  Rng rng(6);
  const auto c = UnitaryConfig::make(haar_unitaries(4, 3, rng), {}, 1.0, Eigen::MatrixXcd::Identity(3, 3));
  SUBCASE("identity translation") {
    const auto t = right_translate(c, Eigen::MatrixXcd::Identity(3, 3));
    CHECK((t.u() - c.u()).norm() == 0.0);
  }
  SUBCASE("commutes with the flow for H = 0, V = I") {
    const Eigen::MatrixXcd l = random_unitary(3, rng);
    const auto lhs = lohe_matrix_rhs(right_translate(c, l));
    const auto rhs = translate_tangent(lohe_matrix_rhs(c), l);
    CHECK((lhs - rhs).cwiseAbs().maxCoeff() < 1e-12);
  }
  SUBCASE("non-unitary L is rejected") {
    CHECK_THROWS_AS(right_translate(c, 2.0 * Eigen::MatrixXcd::Identity(3, 3)), Error);
  }
}

TEST_CASE("matrix to sphere reduction for d = 2") {
  Rng rng(9);
  SUBCASE("single oscillator") {
    const auto c = UnitaryConfig::make({random_unitary(2, rng)}, {random_hermitian(2, rng)}, 1.0,
                                       random_special_unitary(2, rng));
    CHECK(reduce_matrix_to_sphere_check(c) < 1e-12);
  }
  SUBCASE("shared Hamiltonian nu I, aggregated phases") {
    const Eigen::MatrixXcd h = 0.7 * Eigen::MatrixXcd::Identity(2, 2);
    std::vector<Eigen::MatrixXcd> u;
    for (int j = 0; j < 4; ++j) u.push_back(random_special_unitary(2, rng));
    const auto c = UnitaryConfig::make(u, {h}, 1.0, Eigen::MatrixXcd::Identity(2, 2));
    CHECK(reduce_matrix_to_sphere_check(c) < 1e-9);
  }
  SUBCASE("random instances") {
    for (int trial = 0; trial < 20; ++trial) {
      std::vector<Eigen::MatrixXcd> h;
      for (int j = 0; j < 4; ++j) h.push_back(random_hermitian(2, rng));
      const auto c = UnitaryConfig::make(haar_unitaries(4, 2, rng), h, 1.1, random_special_unitary(2, rng));
      CHECK(reduce_matrix_to_sphere_check(c) < 1e-9);
    }
  }
}

TEST_CASE("frustration matrix is orthogonal for unit v") {
  Rng rng(10);
  const Eigen::Vector4d v = random_unit_vector(4, rng);
  const Eigen::Matrix4d m = frustration_matrix4(v);
  CHECK((m.transpose() * m - Eigen::Matrix4d::Identity()).norm() < 1e-14);
  CHECK((m - m.transpose() - 2 * (m - Eigen::Matrix4d::Identity() * v(3))).norm() < 1e-14);
}
