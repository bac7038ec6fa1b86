#pragma once

#include <Eigen/Dense>
#include <string>
#include <vector>

#include "synclab/linalg.hpp"

namespace synclab {

enum class Flavor { Sine, Cosine };

struct Violation {
  std::string invariant;
  int index = -1;  // offending oscillator, -1 when global
  double magnitude = 0.0;

  std::string describe() const;
};

// Phase oscillators. Angles are stored unwrapped.
//   Sine:   dθ_j = ν_j + (κ/N) Σ_k sin(θ_k − θ_j + α)
//   Cosine: dθ_j = ν_j + (κ/N) Σ_k cos(θ_j − θ_k + α)
class PhaseConfig {
 public:
  // nu may be empty (all zero), size 1 (shared) or size N.
  PhaseConfig(Eigen::VectorXd theta, Eigen::VectorXd nu, double kappa, double alpha,
              Flavor flavor = Flavor::Sine);

  int n() const { return static_cast<int>(theta_.size()); }
  const Eigen::VectorXd& theta() const { return theta_; }
  const Eigen::VectorXd& nu() const { return nu_; }
  double kappa() const { return kappa_; }
  double alpha() const { return alpha_; }
  Flavor flavor() const { return flavor_; }

  // Frustration of the Sine-flavor flow with the same vector field.
  double sine_alpha() const;
  bool identical_frequencies() const;

  PhaseConfig with_theta(Eigen::VectorXd theta) const;

 private:
  Eigen::VectorXd theta_;
  Eigen::VectorXd nu_;
  double kappa_;
  double alpha_;
  Flavor flavor_;
};

// Points on S^d, one per column of x ((d+1) × N). V = a·I + W.
class SphereConfig {
 public:
  // Stores the inputs as given. omega may be empty (zero), size 1 (shared) or size N;
  // an empty w means W = 0.
  SphereConfig(Eigen::MatrixXd x, std::vector<Eigen::MatrixXd> omega, double kappa, double a,
               Eigen::MatrixXd w);

  // Normalizes each point and replaces Ω, W by their skew parts.
  static SphereConfig make(Eigen::MatrixXd x, std::vector<Eigen::MatrixXd> omega, double kappa,
                           double a, Eigen::MatrixXd w);

  int n() const { return static_cast<int>(x_.cols()); }
  int dim() const { return static_cast<int>(x_.rows()); }  // d + 1
  const Eigen::MatrixXd& x() const { return x_; }
  const std::vector<Eigen::MatrixXd>& omegas() const { return omega_; }
  const Eigen::MatrixXd& omega(int i) const;
  bool shared_omega() const { return omega_.size() == 1; }
  double kappa() const { return kappa_; }
  double a() const { return a_; }
  const Eigen::MatrixXd& w() const { return w_; }
  Eigen::MatrixXd v() const;

  SphereConfig with_x(Eigen::MatrixXd x) const;

 private:
  Eigen::MatrixXd x_;
  std::vector<Eigen::MatrixXd> omega_;
  double kappa_;
  double a_;
  Eigen::MatrixXd w_;
};

// N unitary d×d matrices stored side by side in a d × (dN) matrix.
class UnitaryConfig {
 public:
  // h may be empty (zero), size 1 (shared) or size N.
  UnitaryConfig(Eigen::MatrixXcd u, std::vector<Eigen::MatrixXcd> h, double kappa,
                Eigen::MatrixXcd v);

  static UnitaryConfig from_list(const std::vector<Eigen::MatrixXcd>& u,
                                 std::vector<Eigen::MatrixXcd> h, double kappa,
                                 Eigen::MatrixXcd v);
  // Replaces each H by its Hermitian part.
  static UnitaryConfig make(const std::vector<Eigen::MatrixXcd>& u, std::vector<Eigen::MatrixXcd> h,
                            double kappa, Eigen::MatrixXcd v);

  int d() const { return static_cast<int>(u_.rows()); }
  int n() const { return d() == 0 ? 0 : static_cast<int>(u_.cols() / u_.rows()); }
  const Eigen::MatrixXcd& u() const { return u_; }
  Eigen::MatrixXcd block(int j) const { return u_.middleCols(j * d(), d()); }
  std::vector<Eigen::MatrixXcd> blocks() const;
  const std::vector<Eigen::MatrixXcd>& hs() const { return h_; }
  const Eigen::MatrixXcd& h(int j) const;
  bool shared_h() const { return h_.size() == 1; }
  double kappa() const { return kappa_; }
  const Eigen::MatrixXcd& v() const { return v_; }

  UnitaryConfig with_u(Eigen::MatrixXcd u) const;

 private:
  Eigen::MatrixXcd u_;
  std::vector<Eigen::MatrixXcd> h_;
  double kappa_;
  Eigen::MatrixXcd v_;
};

inline constexpr double kUnitTol = 1e-12;
inline constexpr double kUnitaryTol = 1e-10;

std::vector<Violation> validate(const PhaseConfig& cfg);
std::vector<Violation> validate(const SphereConfig& cfg);
std::vector<Violation> validate(const UnitaryConfig& cfg);

// Pauli matrices in the convention σ1 = diag(1,−1), σ2 = [[0,−i],[i,0]], σ3 = [[0,1],[1,0]].
Eigen::Matrix2cd pauli(int k);

struct Unitary2Embedding {
  double theta;
  Eigen::Vector4d x;
};

// U = e^{−iθ}(i Σ_k x^k σ_k + x^4 I) with ‖x‖ = 1 and θ = −arg(det U)/2.
Unitary2Embedding embed_unitary2_to_sphere(const Eigen::MatrixXcd& u, double tol = kUnitaryTol);
Eigen::Matrix2cd assemble_unitary2(double theta, const Eigen::Vector4d& x);
// Real coordinates of Q in the basis {iσ1, iσ2, iσ3, I}.
Eigen::Vector4d quaternion_coords(const Eigen::Matrix2cd& q);

}  // namespace synclab
