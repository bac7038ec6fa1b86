#include "synclab/reduce_sphere.hpp"

#include <cmath>

#include "synclab/error.hpp"
#include "synclab/invariants.hpp"

namespace synclab {

Eigen::VectorXd sphere_stereo_project(const Eigen::VectorXd& x, const Eigen::VectorXd& x_n) {
  const Eigen::VectorXd diff = x - x_n;
  const double d2 = diff.squaredNorm();
  if (!(d2 > 1e-24)) throw Error(ErrorCode::CoincidentPoint, "point coincides with the projection pole");
  return x_n + (2.0 / d2) * diff;
}

Eigen::VectorXd sphere_stereo_invert(const Eigen::VectorXd& y, const Eigen::VectorXd& x_n) {
  const double y2 = y.squaredNorm();
  if (std::abs(y.dot(x_n)) > 1e-10 * (1.0 + std::sqrt(y2)))
    throw Error(ErrorCode::NonOrthogonal, "y is not orthogonal to x_N");
  const double q = 1.0 + y2;
  return (2.0 / q) * y + ((y2 - 1.0) / q) * x_n;
}

ProjectedSphereData project_sphere_data(const SphereConfig& cfg) {
  const int n = cfg.n();
  if (n < 2) throw Error(ErrorCode::InvalidArgument, "sphere reduction needs N >= 2");
  const Eigen::MatrixXd id = Eigen::MatrixXd::Identity(cfg.dim(), cfg.dim());
  if ((cfg.v() - id).norm() != 0.0) throw Error(ErrorCode::InvalidArgument, "sphere reduction needs V = I");
  for (const auto& o : cfg.omegas())
    if (o.norm() != 0.0) throw Error(ErrorCode::InvalidArgument, "sphere reduction needs Omega = 0");
  ProjectedSphereData d;
  d.n = n;
  d.kappa = cfg.kappa();
  d.x_n0 = cfg.x().col(n - 1);
  d.y0.resize(cfg.dim(), n - 1);
  for (int j = 0; j + 1 < n; ++j) {
    if ((cfg.x().col(j) - d.x_n0).norm() <= 1e-12)
      throw Error(ErrorCode::CoincidentPoint, "x_" + std::to_string(j) + " coincides with x_N");
    d.y0.col(j) = sphere_stereo_project(cfg.x().col(j), d.x_n0);
  }
  return d;
}

namespace {

struct StereoField {
  double kappa;
  int n;
  Eigen::MatrixXd operator()(const Eigen::MatrixXd& s) const {
    const Eigen::Index m = s.cols() - 1;
    const auto y = s.leftCols(m);
    const Eigen::VectorXd xn = s.col(m);
    Eigen::VectorXd s2 = Eigen::VectorXd::Zero(s.rows());
    double c1 = 1.0;
    Eigen::VectorXd w(m);
    for (Eigen::Index k = 0; k < m; ++k) {
      const double y2 = y.col(k).squaredNorm();
      const double q = 1.0 + y2;
      w(k) = 2.0 / q;
      s2 += w(k) * y.col(k);
      c1 += (y2 - 1.0) / q;
    }
    const double c = kappa / n;
    Eigen::MatrixXd out(s.rows(), s.cols());
    const Eigen::VectorXd inner = y.transpose() * (y * w);
    for (Eigen::Index i = 0; i < m; ++i) out.col(i) = c * (s2 + c1 * y.col(i) - inner(i) * xn);
    out.col(m) = c * s2;
    return out;
  }
};

}  // namespace

StereoTrajectory integrate_stereo_full(const ProjectedSphereData& data, const IntegratorSettings& st,
                                       double t_final) {
  Eigen::MatrixXd s0(data.y0.rows(), data.n);
  s0.leftCols(data.n - 1) = data.y0;
  s0.col(data.n - 1) = data.x_n0;
  auto reproject = [](Eigen::MatrixXd& s) {
    const Eigen::Index m = s.cols() - 1;
    s.col(m).normalize();
    const Eigen::VectorXd xn = s.col(m);
    for (Eigen::Index i = 0; i < m; ++i) {
      s.col(i) -= s.col(i).dot(xn) * xn;
      if (s.col(i).norm() > 1e12)
        throw Error(ErrorCode::PassedThroughProjectionPoint, "y_" + std::to_string(i) + " exceeded 1e12");
    }
  };
  return integrate_ode(StereoField{data.kappa, data.n}, s0, st, t_final, reproject);
}

StereoTrajectory project_sphere_trajectory(const SphereTrajectory& full) {
  StereoTrajectory out;
  out.times = full.times;
  for (const auto& x : full.states) {
    const Eigen::Index m = x.cols() - 1;
    Eigen::MatrixXd s(x.rows(), x.cols());
    for (Eigen::Index i = 0; i < m; ++i) s.col(i) = sphere_stereo_project(x.col(i), x.col(m));
    s.col(m) = x.col(m);
    out.states.push_back(std::move(s));
  }
  return out;
}

namespace {

// Packed reduced state [a, b, vec(M)].
struct ABMField {
  const ProjectedSphereData* data;
  bool update_m;
  Eigen::VectorXd operator()(const Eigen::VectorXd& z) const {
    const Eigen::Index dim = data->x_n0.size();
    const double a = z(0);
    const Eigen::VectorXd b = z.segment(1, dim);
    const Eigen::Map<const Eigen::MatrixXd> m(z.data() + 1 + dim, dim, dim);
    const double c = data->kappa / data->n;
    double sa = 1.0;
    Eigen::VectorXd sb = Eigen::VectorXd::Zero(dim);
    Eigen::VectorXd zz = Eigen::VectorXd::Zero(dim);
    for (Eigen::Index k = 0; k < data->y0.cols(); ++k) {
      const Eigen::VectorXd w = a * data->y0.col(k) + b;
      const double w2 = w.squaredNorm();
      const double q = 1.0 + w2;
      sa += (w2 - 1.0) / q;
      sb += (2.0 * a / q) * data->y0.col(k);
      zz += (2.0 / q) * w;
    }
    Eigen::VectorXd out(z.size());
    out(0) = c * sa * a;
    out.segment(1, dim) = data->kappa * b + c * sb;
    Eigen::Map<Eigen::MatrixXd> dm(out.data() + 1 + dim, dim, dim);
    if (update_m) {
      zz *= c;
      // L v = ⟨v, x_N⁰⟩ z − ⟨v, z⟩ x_N⁰
      const Eigen::MatrixXd l = zz * data->x_n0.transpose() - data->x_n0 * zz.transpose();
      dm = m * l;
    } else {
      dm.setZero();
    }
    return out;
  }
};

}  // namespace

ABMTrajectory integrate_abM(const ProjectedSphereData& data, const IntegratorSettings& st, double t_final,
                            bool update_m) {
  const Eigen::Index dim = data.x_n0.size();
  Eigen::VectorXd z0 = Eigen::VectorXd::Zero(1 + dim + dim * dim);
  z0(0) = 1.0;
  Eigen::Map<Eigen::MatrixXd>(z0.data() + 1 + dim, dim, dim).setIdentity();
  const Eigen::VectorXd xn = data.x_n0;
  auto fix = [dim, xn, update_m](Eigen::VectorXd& z) {
    if (!(z(0) > 0.0)) throw Error(ErrorCode::IntegratorFailure, "a(t) <= 0");
    Eigen::Ref<Eigen::VectorXd> b = z.segment(1, dim);
    b -= b.dot(xn) * xn;
    if (update_m) {
      Eigen::Map<Eigen::MatrixXd> m(z.data() + 1 + dim, dim, dim);
      m = polar_orthogonal(m);
    }
  };
  const auto tr = integrate_ode(ABMField{&data, update_m}, z0, st, t_final, fix);
  ABMTrajectory out;
  out.times = tr.times;
  for (const auto& z : tr.states) {
    ReducedSphereState s;
    s.a = z(0);
    s.b = z.segment(1, dim);
    s.m = Eigen::Map<const Eigen::MatrixXd>(z.data() + 1 + dim, dim, dim);
    out.states.push_back(std::move(s));
  }
  return out;
}

StereoTrajectory reconstruct_abM(const ABMTrajectory& reduced, const ProjectedSphereData& data) {
  StereoTrajectory out;
  out.times = reduced.times;
  for (const auto& s : reduced.states) {
    Eigen::MatrixXd st(data.x_n0.size(), data.n);
    for (Eigen::Index i = 0; i < data.y0.cols(); ++i) st.col(i) = s.m * (s.a * data.y0.col(i) + s.b);
    st.col(data.n - 1) = s.m * data.x_n0;
    out.states.push_back(std::move(st));
  }
  return out;
}

double max_discrepancy(const StereoTrajectory& a, const StereoTrajectory& b) {
  if (a.size() != b.size()) throw Error(ErrorCode::MismatchedGrids, "trajectory lengths differ");
  double m = 0.0;
  for (size_t i = 0; i < a.size(); ++i) {
    if (std::abs(a.times[i] - b.times[i]) > 1e-12 * std::max(1.0, a.times[i]))
      throw Error(ErrorCode::MismatchedGrids, "time grids differ at record " + std::to_string(i));
    m = std::max(m, (a.states[i] - b.states[i]).cwiseAbs().maxCoeff());
  }
  return m;
}

double rho2_from_ab(double a, const Eigen::VectorXd& b, const ProjectedSphereData& data) {
  Eigen::VectorXd s = Eigen::VectorXd::Zero(b.size());
  double c = 1.0;
  for (Eigen::Index k = 0; k < data.y0.cols(); ++k) {
    const Eigen::VectorXd w = a * data.y0.col(k) + b;
    const double w2 = w.squaredNorm();
    s += (2.0 / (1.0 + w2)) * w;
    c += (w2 - 1.0) / (1.0 + w2);
  }
  const double n = data.n;
  return (s.squaredNorm() + c * c) / (n * n);
}

ABMDiagnostics diagnose_abM(const ABMTrajectory& reduced, const StereoTrajectory& stereo,
                            const ProjectedSphereData& data) {
  if (reduced.size() != stereo.size()) throw Error(ErrorCode::MismatchedGrids, "trajectory lengths differ");
  ABMDiagnostics g;
  g.min_a = reduced.states.empty() ? 0.0 : reduced.states[0].a;
  const Eigen::Index m = data.y0.cols();
  std::vector<std::pair<Eigen::Index, Eigen::Index>> pairs;
  for (Eigen::Index i = 0; i < m; ++i)
    for (Eigen::Index j = i + 1; j < m; ++j) pairs.emplace_back(i, j);
  const auto np = static_cast<Eigen::Index>(pairs.size());
  auto gram = [&](const Eigen::MatrixXd& s) {
    Eigen::MatrixXd diffs(s.rows(), np);
    for (Eigen::Index p = 0; p < np; ++p) diffs.col(p) = s.col(pairs[p].first) - s.col(pairs[p].second);
    return Eigen::MatrixXd(diffs.transpose() * diffs);
  };
  const Eigen::MatrixXd g0 = gram(stereo.states[0]);
  auto rel = [](double x, double y) { return std::abs(x - y) / std::max({1.0, std::abs(x), std::abs(y)}); };
  for (size_t t = 0; t < reduced.size(); ++t) {
    const auto& s = reduced.states[t];
    g.max_orthogonality_defect = std::max(g.max_orthogonality_defect, orthogonality_defect(s.m));
    g.min_a = std::min(g.min_a, s.a);
    g.max_b_normal = std::max(g.max_b_normal, std::abs(s.b.dot(data.x_n0)));
    const Eigen::MatrixXd gt = gram(stereo.states[t]);
    const double a2 = s.a * s.a;
    for (Eigen::Index p = 0; p < np; ++p)
      for (Eigen::Index q = 0; q < np; ++q) {
        g.inner_product_law = std::max(g.inner_product_law, rel(gt(p, q), a2 * g0(p, q)));
        for (Eigen::Index r = 0; r < np; ++r)
          for (Eigen::Index u = r; u < np; ++u)
            g.eight_index_identity =
                std::max(g.eight_index_identity, rel(gt(p, q) * g0(r, u), g0(p, q) * gt(r, u)));
      }
    Eigen::MatrixXd x(stereo.states[t].rows(), data.n);
    const Eigen::VectorXd xn = stereo.states[t].col(data.n - 1);
    for (Eigen::Index i = 0; i < m; ++i) x.col(i) = sphere_stereo_invert(stereo.states[t].col(i), xn);
    x.col(data.n - 1) = xn;
    const double rho2 = x.rowwise().mean().squaredNorm();
    g.rho2_mismatch = std::max(g.rho2_mismatch, std::abs(rho2 - rho2_from_ab(s.a, s.b, data)));
  }
  return g;
}

const char* to_string(AggregationVerdict v) {
  switch (v) {
    case AggregationVerdict::Aggregated: return "Aggregated";
    case AggregationVerdict::NotAggregated: return "NotAggregated";
    case AggregationVerdict::Unconditioned: return "Unconditioned";
  }
  return "NotAggregated";
}

double fit_decay_rate(const std::vector<double>& t, const std::vector<double>& d, double floor) {
  const size_t start = t.size() / 2;
  double st = 0, sl = 0, stt = 0, stl = 0;
  int n = 0;
  for (size_t i = start; i < t.size(); ++i) {
    if (!(d[i] > floor)) continue;
    const double l = std::log(d[i]);
    st += t[i];
    sl += l;
    stt += t[i] * t[i];
    stl += t[i] * l;
    ++n;
  }
  if (n < 2) return 0.0;
  const double den = n * stt - st * st;
  if (den == 0.0) return 0.0;
  return -(n * stl - st * sl) / den;
}

SphereAggregationResult sphere_aggregation_check(const SphereConfig& cfg, double t_final,
                                                 const IntegratorSettings& st) {
  SphereAggregationResult r;
  r.w_op = op_norm(cfg.w());
  r.w_fro = cfg.w().norm();
  r.d_a0 = sphere_diameter_A(cfg.x());
  const double a = cfg.a();
  const bool shared = cfg.shared_omega();
  r.hypothesis = shared && r.w_op < a && r.d_a0 < 1.0 - r.w_op / a;
  r.hypothesis_frobenius = shared && r.w_fro < a && r.d_a0 < 1.0 - r.w_fro / a;
  r.predicted_rate = 2.0 * cfg.kappa() * (a - r.w_op);
  const auto tr = integrate(cfg, st, t_final);
  std::vector<double> da;
  da.reserve(tr.size());
  for (const auto& x : tr.states) da.push_back(sphere_diameter_A(x));
  r.final_max_distance = sphere_max_distance(tr.states.back());
  r.aggregated = r.final_max_distance < 1e-4;
  // D(A) ~ 1e−24 is where chord differences reach roundoff
  r.fitted_rate = fit_decay_rate(tr.times, da, 1e-24);
  r.rate_ok = r.fitted_rate >= 0.5 * r.predicted_rate;
  if (!r.hypothesis)
    r.verdict = AggregationVerdict::Unconditioned;
  else
    r.verdict = r.aggregated ? AggregationVerdict::Aggregated : AggregationVerdict::NotAggregated;
  return r;
}

}  // namespace synclab
