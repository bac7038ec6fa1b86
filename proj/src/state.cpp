#include "synclab/state.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "synclab/error.hpp"

namespace synclab {

std::string Violation::describe() const {
  std::ostringstream os;
  os << invariant;
  if (index >= 0) os << " at index " << index;
  os << " (magnitude " << magnitude << ")";
  return os.str();
}

namespace {

Eigen::VectorXd broadcast(const Eigen::VectorXd& v, Eigen::Index n, const char* what) {
  if (v.size() == 0) return Eigen::VectorXd::Zero(n);
  if (v.size() == 1) return Eigen::VectorXd::Constant(n, v(0));
  if (v.size() != n) throw Error(ErrorCode::DimensionMismatch, std::string(what) + " has wrong length");
  return v;
}

}  // namespace

PhaseConfig::PhaseConfig(Eigen::VectorXd theta, Eigen::VectorXd nu, double kappa, double alpha,
                         Flavor flavor)
    : theta_(std::move(theta)), kappa_(kappa), alpha_(alpha), flavor_(flavor) {
  if (theta_.size() < 1) throw Error(ErrorCode::InvalidArgument, "PhaseConfig needs N >= 1");
  nu_ = broadcast(nu, theta_.size(), "nu");
}

double PhaseConfig::sine_alpha() const {
  return flavor_ == Flavor::Sine ? alpha_ : std::numbers::pi / 2 - alpha_;
}

bool PhaseConfig::identical_frequencies() const {
  return (nu_.array() == nu_(0)).all();
}

PhaseConfig PhaseConfig::with_theta(Eigen::VectorXd theta) const {
  if (theta.size() != theta_.size()) throw Error(ErrorCode::DimensionMismatch, "theta");
  PhaseConfig c = *this;
  c.theta_ = std::move(theta);
  return c;
}

SphereConfig::SphereConfig(Eigen::MatrixXd x, std::vector<Eigen::MatrixXd> omega, double kappa,
                           double a, Eigen::MatrixXd w)
    : x_(std::move(x)), omega_(std::move(omega)), kappa_(kappa), a_(a), w_(std::move(w)) {
  const Eigen::Index dim = x_.rows();
  if (x_.cols() < 1 || dim < 2) throw Error(ErrorCode::InvalidArgument, "SphereConfig needs N >= 1, d >= 1");
  if (omega_.empty()) omega_.push_back(Eigen::MatrixXd::Zero(dim, dim));
  if (omega_.size() != 1 && omega_.size() != static_cast<size_t>(x_.cols()))
    throw Error(ErrorCode::DimensionMismatch, "Omega list must have 1 or N entries");
  for (const auto& o : omega_)
    if (o.rows() != dim || o.cols() != dim) throw Error(ErrorCode::DimensionMismatch, "Omega shape");
  if (w_.size() == 0) w_ = Eigen::MatrixXd::Zero(dim, dim);
  if (w_.rows() != dim || w_.cols() != dim) throw Error(ErrorCode::DimensionMismatch, "W shape");
}

SphereConfig SphereConfig::make(Eigen::MatrixXd x, std::vector<Eigen::MatrixXd> omega, double kappa,
                                double a, Eigen::MatrixXd w) {
  for (Eigen::Index j = 0; j < x.cols(); ++j) x.col(j).normalize();
  for (auto& o : omega) o = skew_part(o);
  if (w.size() != 0) w = skew_part(w);
  return SphereConfig(std::move(x), std::move(omega), kappa, a, std::move(w));
}

const Eigen::MatrixXd& SphereConfig::omega(int i) const {
  return omega_.size() == 1 ? omega_[0] : omega_[static_cast<size_t>(i)];
}

Eigen::MatrixXd SphereConfig::v() const {
  return a_ * Eigen::MatrixXd::Identity(dim(), dim()) + w_;
}

SphereConfig SphereConfig::with_x(Eigen::MatrixXd x) const {
  if (x.rows() != x_.rows() || x.cols() != x_.cols()) throw Error(ErrorCode::DimensionMismatch, "x");
  SphereConfig c = *this;
  c.x_ = std::move(x);
  return c;
}

UnitaryConfig::UnitaryConfig(Eigen::MatrixXcd u, std::vector<Eigen::MatrixXcd> h, double kappa,
                             Eigen::MatrixXcd v)
    : u_(std::move(u)), h_(std::move(h)), kappa_(kappa), v_(std::move(v)) {
  const Eigen::Index d = u_.rows();
  if (d < 1 || u_.cols() < d || u_.cols() % d != 0)
    throw Error(ErrorCode::DimensionMismatch, "U must be d x dN with N >= 1");
  if (h_.empty()) h_.push_back(Eigen::MatrixXcd::Zero(d, d));
  if (h_.size() != 1 && h_.size() != static_cast<size_t>(n()))
    throw Error(ErrorCode::DimensionMismatch, "H list must have 1 or N entries");
  for (const auto& m : h_)
    if (m.rows() != d || m.cols() != d) throw Error(ErrorCode::DimensionMismatch, "H shape");
  if (v_.size() == 0) v_ = Eigen::MatrixXcd::Identity(d, d);
  if (v_.rows() != d || v_.cols() != d) throw Error(ErrorCode::DimensionMismatch, "V shape");
}

UnitaryConfig UnitaryConfig::from_list(const std::vector<Eigen::MatrixXcd>& u,
                                       std::vector<Eigen::MatrixXcd> h, double kappa,
                                       Eigen::MatrixXcd v) {
  if (u.empty()) throw Error(ErrorCode::InvalidArgument, "UnitaryConfig needs N >= 1");
  const Eigen::Index d = u[0].rows();
  Eigen::MatrixXcd stacked(d, d * static_cast<Eigen::Index>(u.size()));
  for (size_t j = 0; j < u.size(); ++j) {
    if (u[j].rows() != d || u[j].cols() != d) throw Error(ErrorCode::DimensionMismatch, "U_j shape");
    stacked.middleCols(static_cast<Eigen::Index>(j) * d, d) = u[j];
  }
  return UnitaryConfig(std::move(stacked), std::move(h), kappa, std::move(v));
}

UnitaryConfig UnitaryConfig::make(const std::vector<Eigen::MatrixXcd>& u,
                                  std::vector<Eigen::MatrixXcd> h, double kappa, Eigen::MatrixXcd v) {
  for (auto& m : h) m = hermitian_part(m);
  return from_list(u, std::move(h), kappa, std::move(v));
}

std::vector<Eigen::MatrixXcd> UnitaryConfig::blocks() const {
  std::vector<Eigen::MatrixXcd> out;
  out.reserve(static_cast<size_t>(n()));
  for (int j = 0; j < n(); ++j) out.push_back(block(j));
  return out;
}

const Eigen::MatrixXcd& UnitaryConfig::h(int j) const {
  return h_.size() == 1 ? h_[0] : h_[static_cast<size_t>(j)];
}

UnitaryConfig UnitaryConfig::with_u(Eigen::MatrixXcd u) const {
  if (u.rows() != u_.rows() || u.cols() != u_.cols()) throw Error(ErrorCode::DimensionMismatch, "U");
  UnitaryConfig c = *this;
  c.u_ = std::move(u);
  return c;
}

std::vector<Violation> validate(const PhaseConfig& cfg) {
  std::vector<Violation> out;
  for (int j = 0; j < cfg.n(); ++j) {
    if (!std::isfinite(cfg.theta()(j))) out.push_back({"finite theta", j, cfg.theta()(j)});
    if (!std::isfinite(cfg.nu()(j))) out.push_back({"finite nu", j, cfg.nu()(j)});
  }
  if (!std::isfinite(cfg.kappa())) out.push_back({"finite kappa", -1, cfg.kappa()});
  if (!std::isfinite(cfg.alpha())) out.push_back({"finite alpha", -1, cfg.alpha()});
  return out;
}

std::vector<Violation> validate(const SphereConfig& cfg) {
  std::vector<Violation> out;
  for (int j = 0; j < cfg.n(); ++j) {
    if (!cfg.x().col(j).allFinite()) {
      out.push_back({"finite x", j, NAN});
      continue;
    }
    double dev = std::abs(cfg.x().col(j).norm() - 1.0);
    if (dev > kUnitTol) out.push_back({"unit norm", j, dev});
  }
  for (size_t i = 0; i < cfg.omegas().size(); ++i) {
    const auto& o = cfg.omegas()[i];
    double s = (o + o.transpose()).norm();
    if (!(s == 0.0)) out.push_back({"Omega skew-symmetry", static_cast<int>(i), s});
  }
  double sw = (cfg.w() + cfg.w().transpose()).norm();
  if (!(sw == 0.0)) out.push_back({"W skew-symmetry", -1, sw});
  if (!std::isfinite(cfg.kappa())) out.push_back({"finite kappa", -1, cfg.kappa()});
  if (!std::isfinite(cfg.a())) out.push_back({"finite a", -1, cfg.a()});
  return out;
}

std::vector<Violation> validate(const UnitaryConfig& cfg) {
  std::vector<Violation> out;
  for (int j = 0; j < cfg.n(); ++j) {
    Eigen::MatrixXcd u = cfg.block(j);
    if (!u.allFinite()) {
      out.push_back({"finite U", j, NAN});
      continue;
    }
    double dev = unitarity_defect(u);
    if (dev > kUnitaryTol) out.push_back({"unitarity", j, dev});
  }
  for (size_t i = 0; i < cfg.hs().size(); ++i) {
    double dev = (cfg.hs()[i] - cfg.hs()[i].adjoint()).norm();
    if (dev > kUnitaryTol) out.push_back({"H Hermitian", static_cast<int>(i), dev});
  }
  double dv = unitarity_defect(cfg.v());
  if (dv > kUnitaryTol) out.push_back({"V unitarity", -1, dv});
  if (!std::isfinite(cfg.kappa())) out.push_back({"finite kappa", -1, cfg.kappa()});
  return out;
}

Eigen::Matrix2cd pauli(int k) {
  const cplx i(0.0, 1.0);
  Eigen::Matrix2cd s;
  switch (k) {
    case 1: s << 1.0, 0.0, 0.0, -1.0; break;
    case 2: s << 0.0, -i, i, 0.0; break;
    case 3: s << 0.0, 1.0, 1.0, 0.0; break;
    default: throw Error(ErrorCode::InvalidArgument, "Pauli index must be 1, 2 or 3");
  }
  return s;
}

Eigen::Matrix2cd assemble_unitary2(double theta, const Eigen::Vector4d& x) {
  Eigen::Matrix2cd q;
  q << cplx(x(3), x(0)), cplx(x(1), x(2)), cplx(-x(1), x(2)), cplx(x(3), -x(0));
  return std::exp(cplx(0.0, -theta)) * q;
}

Eigen::Vector4d quaternion_coords(const Eigen::Matrix2cd& q) {
  return {(q(0, 0) - q(1, 1)).imag() / 2, (q(0, 1) - q(1, 0)).real() / 2,
          (q(0, 1) + q(1, 0)).imag() / 2, (q(0, 0) + q(1, 1)).real() / 2};
}

Unitary2Embedding embed_unitary2_to_sphere(const Eigen::MatrixXcd& u, double tol) {
  if (u.rows() != 2 || u.cols() != 2) throw Error(ErrorCode::DimensionMismatch, "expected a 2x2 matrix");
  double dev = unitarity_defect(u);
  if (!(dev <= tol)) throw Error(ErrorCode::NonUnitary, "defect " + std::to_string(dev));
  double theta = -std::arg(u.determinant()) / 2;
  Eigen::Matrix2cd q = std::exp(cplx(0.0, theta)) * u;
  return {theta, quaternion_coords(q)};
}

}  // namespace synclab
