#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "synclab/checks.hpp"
#include "synclab/dynamics.hpp"
#include "synclab/equilibria.hpp"
#include "synclab/error.hpp"
#include "synclab/integrate.hpp"
#include "synclab/invariants.hpp"
#include "synclab/reduce_kuramoto.hpp"
#include "synclab/reduce_sphere.hpp"
#include "synclab/runner.hpp"
#include "synclab/scenario.hpp"

namespace py = pybind11;
using namespace synclab;

namespace {

// Blocks are exchanged with Python as lists of d×d arrays.
Eigen::MatrixXcd join_blocks(const std::vector<Eigen::MatrixXcd>& u) {
  if (u.empty()) throw Error(ErrorCode::InvalidArgument, "need at least one block");
  const Eigen::Index d = u[0].rows();
  Eigen::MatrixXcd out(d, d * static_cast<Eigen::Index>(u.size()));
  for (size_t j = 0; j < u.size(); ++j) {
    if (u[j].rows() != d || u[j].cols() != d) throw Error(ErrorCode::DimensionMismatch, "block shape");
    out.middleCols(static_cast<Eigen::Index>(j) * d, d) = u[j];
  }
  return out;
}

std::vector<Eigen::MatrixXcd> split_blocks(const Eigen::MatrixXcd& u) {
  const Eigen::Index d = u.rows();
  std::vector<Eigen::MatrixXcd> out;
  for (Eigen::Index j = 0; j < u.cols() / d; ++j) out.emplace_back(u.middleCols(j * d, d));
  return out;
}

IntegratorSettings make_settings(const std::string& scheme, double dt, const std::string& projection,
                                 int record_every, bool adaptive, double rtol, double atol) {
  IntegratorSettings st;
  st.scheme = parse_scheme(scheme);
  st.dt = dt;
  st.projection = parse_projection(projection);
  st.record_every = record_every;
  st.adaptive = adaptive;
  st.rtol = rtol;
  st.atol = atol;
  return st;
}

template <class S, class Conv>
py::dict trajectory_dict(const Trajectory<S>& tr, Conv conv) {
  py::list states;
  for (const auto& s : tr.states) states.append(conv(s));
  py::dict obs;
  for (const auto& [k, v] : tr.observables) obs[py::str(k)] = v;
  py::dict d;
  d["t"] = tr.times;
  d["states"] = states;
  d["observables"] = obs;
  return d;
}

json json_from_py(const py::object& o) {
  return json::parse(py::module_::import("json").attr("dumps")(o).cast<std::string>());
}

py::object py_from_json(const json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Frustrated Kuramoto, Lohe sphere and Lohe matrix models";
  py::register_exception<Error>(m, "SynclabError", PyExc_RuntimeError);

  py::enum_<Flavor>(m, "Flavor").value("Sine", Flavor::Sine).value("Cosine", Flavor::Cosine);

  py::class_<Violation>(m, "Violation")
      .def_readonly("invariant", &Violation::invariant)
      .def_readonly("index", &Violation::index)
      .def_readonly("magnitude", &Violation::magnitude)
      .def("__repr__", &Violation::describe);

  py::class_<PhaseConfig>(m, "PhaseConfig")
      .def(py::init<Eigen::VectorXd, Eigen::VectorXd, double, double, Flavor>(), py::arg("theta"),
           py::arg("nu") = Eigen::VectorXd(), py::arg("kappa") = 1.0, py::arg("alpha") = 0.0,
           py::arg("flavor") = Flavor::Sine)
      .def_property_readonly("n", &PhaseConfig::n)
      .def_property_readonly("theta", &PhaseConfig::theta)
      .def_property_readonly("nu", &PhaseConfig::nu)
      .def_property_readonly("kappa", &PhaseConfig::kappa)
      .def_property_readonly("alpha", &PhaseConfig::alpha)
      .def_property_readonly("flavor", &PhaseConfig::flavor);

  py::class_<SphereConfig>(m, "SphereConfig")
      .def(py::init([](Eigen::MatrixXd x, std::vector<Eigen::MatrixXd> omega, double kappa, double a,
                       Eigen::MatrixXd w) { return SphereConfig::make(std::move(x), std::move(omega), kappa, a, std::move(w)); }),
           py::arg("x"), py::arg("omega") = std::vector<Eigen::MatrixXd>{}, py::arg("kappa") = 1.0,
           py::arg("a") = 1.0, py::arg("w") = Eigen::MatrixXd(),
           "x holds one point per column; columns are normalized and Omega, W replaced by their skew parts.")
      .def_property_readonly("n", &SphereConfig::n)
      .def_property_readonly("dim", &SphereConfig::dim)
      .def_property_readonly("x", &SphereConfig::x)
      .def_property_readonly("kappa", &SphereConfig::kappa)
      .def_property_readonly("a", &SphereConfig::a)
      .def_property_readonly("w", &SphereConfig::w)
      .def_property_readonly("v", &SphereConfig::v);

  py::class_<UnitaryConfig>(m, "UnitaryConfig")
      .def(py::init([](const std::vector<Eigen::MatrixXcd>& u, std::vector<Eigen::MatrixXcd> h, double kappa,
                       Eigen::MatrixXcd v) { return UnitaryConfig::make(u, std::move(h), kappa, std::move(v)); }),
           py::arg("u"), py::arg("h") = std::vector<Eigen::MatrixXcd>{}, py::arg("kappa") = 1.0,
           py::arg("v") = Eigen::MatrixXcd())
      .def_property_readonly("n", &UnitaryConfig::n)
      .def_property_readonly("d", &UnitaryConfig::d)
      .def_property_readonly("u", &UnitaryConfig::blocks)
      .def_property_readonly("kappa", &UnitaryConfig::kappa)
      .def_property_readonly("v", &UnitaryConfig::v);

  m.def("validate", py::overload_cast<const PhaseConfig&>(&validate));
  m.def("validate", py::overload_cast<const SphereConfig&>(&validate));
  m.def("validate", py::overload_cast<const UnitaryConfig&>(&validate));

  m.def("kuramoto_rhs", py::overload_cast<const PhaseConfig&>(&kuramoto_rhs));
  m.def("sphere_rhs", py::overload_cast<const SphereConfig&>(&sphere_rhs));
  m.def("lohe_matrix_rhs", [](const UnitaryConfig& c) { return split_blocks(lohe_matrix_rhs(c)); });
  m.def("reduce_matrix_to_sphere_check", &reduce_matrix_to_sphere_check);
  m.def("embed_unitary2_to_sphere", [](const Eigen::MatrixXcd& u) {
    const auto e = embed_unitary2_to_sphere(u);
    return py::make_tuple(e.theta, Eigen::VectorXd(e.x));
  });

  m.def(
      "integrate",
      [](const PhaseConfig& c, double t_final, const std::string& scheme, double dt, int record_every, bool adaptive,
         double rtol, double atol, const std::vector<std::string>& observables) {
        auto tr = integrate(c, make_settings(scheme, dt, "None", record_every, adaptive, rtol, atol), t_final);
        record_observables(c, tr, observables);
        return trajectory_dict(tr, [](const Eigen::VectorXd& s) { return s; });
      },
      py::arg("config"), py::arg("t_final"), py::arg("scheme") = "RK4", py::arg("dt") = 1e-3,
      py::arg("record_every") = 1, py::arg("adaptive") = true, py::arg("rtol") = 1e-9, py::arg("atol") = 1e-12,
      py::arg("observables") = std::vector<std::string>{});
  m.def(
      "integrate",
      [](const SphereConfig& c, double t_final, const std::string& scheme, double dt, const std::string& projection,
         int record_every, bool adaptive, double rtol, double atol, const std::vector<std::string>& observables) {
        auto tr = integrate(c, make_settings(scheme, dt, projection, record_every, adaptive, rtol, atol), t_final);
        record_observables(c, tr, observables);
        return trajectory_dict(tr, [](const Eigen::MatrixXd& s) { return s; });
      },
      py::arg("config"), py::arg("t_final"), py::arg("scheme") = "RK4", py::arg("dt") = 1e-3,
      py::arg("projection") = "Normalize", py::arg("record_every") = 1, py::arg("adaptive") = true,
      py::arg("rtol") = 1e-9, py::arg("atol") = 1e-12, py::arg("observables") = std::vector<std::string>{});
  m.def(
      "integrate",
      [](const UnitaryConfig& c, double t_final, const std::string& scheme, double dt, const std::string& projection,
         int record_every, bool adaptive, double rtol, double atol, const std::vector<std::string>& observables) {
        auto tr = integrate(c, make_settings(scheme, dt, projection, record_every, adaptive, rtol, atol), t_final);
        record_observables(c, tr, observables);
        return trajectory_dict(tr, [](const Eigen::MatrixXcd& s) { return split_blocks(s); });
      },
      py::arg("config"), py::arg("t_final"), py::arg("scheme") = "RK4", py::arg("dt") = 1e-3,
      py::arg("projection") = "Polar", py::arg("record_every") = 1, py::arg("adaptive") = true,
      py::arg("rtol") = 1e-9, py::arg("atol") = 1e-12, py::arg("observables") = std::vector<std::string>{});

  m.def(
      "convergence_order",
      [](const py::object& cfg, const std::string& scheme, double t_final, double h) {
        const Scheme s = parse_scheme(scheme);
        OrderEstimate e;
        if (py::isinstance<PhaseConfig>(cfg)) e = convergence_order(cfg.cast<const PhaseConfig&>(), s, t_final, h);
        else if (py::isinstance<SphereConfig>(cfg)) e = convergence_order(cfg.cast<const SphereConfig&>(), s, t_final, h);
        else e = convergence_order(cfg.cast<const UnitaryConfig&>(), s, t_final, h);
        py::dict d;
        d["p"] = e.p;
        d["exact"] = e.exact;
        d["e1"] = e.e1;
        d["e2"] = e.e2;
        return d;
      },
      py::arg("config"), py::arg("scheme") = "RK4", py::arg("t_final") = 1.0, py::arg("h") = 0.05);

  // invariants
  m.def("functional_I", &functional_I);
  m.def("functional_J_alpha", &functional_J_alpha);
  m.def("cross_ratio_K", &cross_ratio_K);
  m.def("sphere_cross_ratio_H", &sphere_cross_ratio_H);
  m.def("ptolemy_residual", &ptolemy_residual);
  m.def("order_parameter_R", [](const Eigen::VectorXd& th) {
    const auto r = order_parameter_R(th);
    return py::make_tuple(r.r, r.phi);
  });
  m.def("sphere_order_parameter", &sphere_order_parameter);
  m.def("sphere_diameter", &sphere_diameter);
  m.def("sphere_max_distance", &sphere_max_distance);
  m.def("matrix_diameter", [](const std::vector<Eigen::MatrixXcd>& u) { return matrix_diameter(join_blocks(u)); });
  m.def("skew_frustration_product", &skew_frustration_product);
  m.def("matrix_cross_ratio_spectrum", [](const std::vector<Eigen::MatrixXcd>& u, int i, int j, int k, int l) {
    return Eigen::VectorXcd(matrix_cross_ratio_spectrum(join_blocks(u), i, j, k, l));
  });

  // reductions
  m.def("stereo_project_phase", &stereo_project_phase);
  m.def("sphere_stereo_project", &sphere_stereo_project);
  m.def("sphere_stereo_invert", &sphere_stereo_invert);
  m.def(
      "kuramoto_reduction_error",
      [](const PhaseConfig& c, double t_final, double dt) {
        IntegratorSettings st;
        st.dt = dt;
        const auto data = project_phase_data(c);
        const auto fg = integrate_fg(data, st, t_final);
        const auto err = reconstruct_and_compare(integrate(c, st, t_final), data, fg);
        const auto b = check_fg_bounds(data, fg);
        py::dict d;
        d["max_error"] = err.max_error;
        d["cross_ratio_error"] = err.cross_ratio_error;
        d["bounds_ok"] = b.ok;
        return d;
      },
      py::arg("config"), py::arg("t_final"), py::arg("dt") = 1e-3);
  m.def(
      "dichotomy_check",
      [](const Eigen::VectorXd& theta0, double alpha, double kappa, double t_final, double eps) {
        const auto r = dichotomy_check(theta0, alpha, kappa, t_final, eps);
        py::dict d;
        d["verdict"] = to_string(r.verdict);
        d["branch"] = r.branch;
        d["precondition"] = r.precondition;
        d["r_final"] = r.r_final;
        d["sum_theta_monotone"] = r.sum_theta_monotone;
        return d;
      },
      py::arg("theta0"), py::arg("alpha"), py::arg("kappa") = 1.0, py::arg("t_final") = 60.0, py::arg("eps") = 1e-3);
  m.def(
      "sphere_reduction_discrepancy",
      [](const SphereConfig& c, double t_final, double dt) {
        IntegratorSettings st;
        st.dt = dt;
        const auto data = project_sphere_data(c);
        const auto full = project_sphere_trajectory(integrate(c, st, t_final));
        const auto stereo = integrate_stereo_full(data, st, t_final);
        const auto abm = integrate_abM(data, st, t_final);
        const auto recon = reconstruct_abM(abm, data);
        const auto diag = diagnose_abM(abm, stereo, data);
        py::dict d;
        d["full_vs_stereo"] = max_discrepancy(full, stereo);
        d["stereo_vs_abM"] = max_discrepancy(stereo, recon);
        d["full_vs_abM"] = max_discrepancy(full, recon);
        d["orthogonality_defect"] = diag.max_orthogonality_defect;
        d["min_a"] = diag.min_a;
        d["inner_product_law"] = diag.inner_product_law;
        return d;
      },
      py::arg("config"), py::arg("t_final"), py::arg("dt") = 1e-3);

  // equilibria
  m.def("cyclic_rep", [](int n) { return cyclic_rep(n).rho; });
  m.def("symmetric_standard_rep", [](int n) { return symmetric_standard_rep(n).rho; });
  m.def("representation_json", [](const std::string& family, int n) {
    return py_from_json(to_json(family == "cyclic" ? cyclic_rep(n) : symmetric_standard_rep(n)));
  });
  m.def(
      "is_equilibrium",
      [](const UnitaryConfig& c, double tol) {
        const auto r = is_equilibrium(c, tol);
        return py::make_tuple(r.equilibrium, r.residual);
      },
      py::arg("config"), py::arg("tol") = 1e-10);

  // scenarios and checks
  m.def(
      "run_scenario",
      [](const py::object& doc, const std::string& out) {
        const auto res = run_scenario(parse_scenario(json_from_py(doc)), out);
        py::dict d;
        d["exit_code"] = res.exit_code;
        d["outputs"] = res.outputs;
        d["manifest"] = py_from_json(res.manifest);
        d["drift"] = py_from_json(to_json(res.reports));
        return d;
      },
      py::arg("scenario"), py::arg("out"));
  m.def("suite_names", &suite_names);
  m.def("suite_criteria", &suite_criteria);
  m.def(
      "run_suite",
      [](const std::string& name, std::uint64_t seed) {
        std::vector<CheckResult> results;
        for (int id : suite_criteria(name)) results.push_back(run_criterion(id, seed));
        return py_from_json(summary_json(name, seed, results));
      },
      py::arg("name"), py::arg("seed") = kDefaultSeed);
}
