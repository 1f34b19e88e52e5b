#include <sstream>

#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "godel/causality.hpp"
#include "godel/commands.hpp"
#include "godel/errors.hpp"
#include "godel/geometry.hpp"
#include "godel/observables.hpp"
#include "godel/oracle.hpp"
#include "godel/spectrum.hpp"
#include "godel/verify.hpp"

namespace py = pybind11;
using namespace godel;

namespace {

GeometryParams
geometry(double alpha, double omega, double radius, double hbar, double vf)
{
    GeometryParams p;
    p.alpha  = alpha;
    p.omega  = omega;
    p.radius = radius;
    p.hbar   = hbar;
    p.vf     = vf;
    p.validate();
    return p;
}

Branch
branch_of(std::string const& s)
{
    if (s == "plus") {
        return Branch::plus;
    }
    if (s == "minus") {
        return Branch::minus;
    }
    throw DomainError("branch must be 'plus' or 'minus', got '" + s + "'");
}

py::dict
spectrum_dict(SpectrumResult const& s)
{
    py::dict d;
    d["lambda_plus"]    = s.lambda_plus;
    d["lambda_minus"]   = s.lambda_minus;
    d["eps_plus"]       = s.eps_plus;
    d["eps_minus"]      = s.eps_minus;
    d["discriminant"]   = s.discriminant;
    d["valid"]          = s.valid;
    d["residual_plus"]  = s.residual_plus;
    d["residual_minus"] = s.residual_minus;
    return d;
}

/// Runs a table command on a JSON configuration and returns the structured document as text.
template <typename F>
std::string
run_table(std::string const& config_json, F command)
{
    RunConfig cfg;
    merge_json(cfg, nlohmann::json::parse(config_json));
    cfg.format = OutputFormat::structured;
    cfg.out.clear();
    std::ostringstream out;
    emit(cfg, command(cfg), out);
    return out.str();
}

} // namespace

PYBIND11_MODULE(_core, m)
{
    m.doc() = "Dirac spectrum, persistent current and causality of a rotating defected fullerene";

    py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
    py::register_exception<ConfigError>(m, "ConfigError", PyExc_ValueError);
    py::register_exception<RotationSingular>(m, "RotationSingular", PyExc_ArithmeticError);
    py::register_exception<NoBracket>(m, "NoBracket", PyExc_RuntimeError);
    py::register_exception<StiffFailure>(m, "StiffFailure", PyExc_RuntimeError);

    m.def(
        "metric",
        [](double theta, double alpha, double omega, double radius) {
            return metric_at(geometry(alpha, omega, radius, 1.0, 1.0), theta).g;
        },
        py::arg("theta"), py::kw_only(), py::arg("alpha") = 1.0, py::arg("omega") = 0.0, py::arg("radius") = 1.0,
        "Coordinate metric in (t, theta, phi) as a 3x3 array.");

    m.def(
        "maurer_cartan_residual",
        [](double theta, double h, double alpha, double omega, double radius, bool torsion_free) {
            return maurer_cartan_residual(geometry(alpha, omega, radius, 1.0, 1.0), theta, h,
                                          torsion_free ? ConnectionModel::torsion_free
                                                       : ConnectionModel::closed_form);
        },
        py::arg("theta"), py::arg("h"), py::kw_only(), py::arg("alpha") = 1.0, py::arg("omega") = 0.0,
        py::arg("radius") = 1.0, py::arg("torsion_free") = false);

    m.def(
        "spectrum",
        [](int n, double m_, double alpha, double omega, double radius, double flux, std::int64_t defects,
           double hbar, double vf, bool printed) {
            QuantumNumbers const q{n, m_, KPoint::plus};
            GeometryParams const p = geometry(alpha, omega, radius, hbar, vf);
            MonopoleConfig const c = monopole_charge(defects);
            return spectrum_dict(printed ? printed_spectrum(q, p, FluxConfig{flux}, c)
                                         : solve_spectrum(q, p, FluxConfig{flux}, c));
        },
        py::arg("n"), py::arg("m"), py::kw_only(), py::arg("alpha") = 1.0, py::arg("omega") = 0.0,
        py::arg("radius") = 1.0, py::arg("flux") = 0.0, py::arg("defects") = 0, py::arg("hbar") = 1.0,
        py::arg("vf") = 1.0, py::arg("printed") = false,
        "Both roots of the quantization polynomial (or of the quoted closed form when printed=True).");

    m.def(
        "shoot",
        [](int n, double m_, double alpha, double omega, double flux, std::int64_t defects,
           std::string const& branch) {
            OracleEigenvalue const o =
                shoot_eigenvalue({n, m_, KPoint::plus}, geometry(alpha, omega, 1.0, 1.0, 1.0), FluxConfig{flux},
                                 monopole_charge(defects), {}, branch_of(branch));
            py::dict d;
            d["lambda"]         = o.lambda;
            d["match_residual"] = o.match_residual;
            d["node_count"]     = o.node_count;
            return d;
        },
        py::arg("n"), py::arg("m"), py::kw_only(), py::arg("alpha") = 1.0, py::arg("omega") = 0.0,
        py::arg("flux") = 0.0, py::arg("defects") = 0, py::arg("branch") = "plus",
        "Shooting eigenvalue (lambda = eps R / hbar vF) of the first-order system.");

    m.def(
        "persistent_current",
        [](double flux, double alpha, double omega, double radius, std::int64_t defects, int n_max, double m_max,
           std::string const& branch) {
            LevelSet ls;
            ls.n_max  = n_max;
            ls.m_max  = m_max;
            ls.branch = branch_of(branch);
            CurrentResult const r = persistent_current(ls, geometry(alpha, omega, radius, 1.0, 1.0),
                                                       FluxConfig{flux}, monopole_charge(defects));
            py::dict d;
            d["I_analytic"]    = r.i_analytic;
            d["I_printed"]     = r.i_printed;
            d["I_fd"]          = r.i_fd;
            d["n_levels_used"] = r.levels_used();
            d["warnings"]      = r.warnings;
            return d;
        },
        py::arg("flux"), py::kw_only(), py::arg("alpha") = 1.0, py::arg("omega") = 0.0, py::arg("radius") = 1.0,
        py::arg("defects") = 0, py::arg("n_max") = 3, py::arg("m_max") = 2.5, py::arg("branch") = "minus");

    m.def(
        "classify",
        [](double omega, double l2) {
            CausalityReport const r = classify({omega, l2});
            py::dict d;
            d["causal_class"]    = to_string(r.causal_class);
            d["curvature_class"] = to_string(r.curvature_class);
            d["critical_radii"]  = r.critical_radii;
            d["r_max"]           = r.r_max;
            return d;
        },
        py::arg("omega"), py::arg("l2"), "Causality and curvature class of the Goedel-type member.");

    m.def("_spectrum_table", [](std::string const& cfg) { return run_table(cfg, cmd_spectrum); });
    m.def("_current_table", [](std::string const& cfg) { return run_table(cfg, cmd_current); });
    m.def("_causality_table", [](std::string const& cfg) { return run_table(cfg, cmd_causality); });
    m.def("_oracle_table", [](std::string const& cfg) { return run_table(cfg, cmd_oracle); });
    m.def(
        "_verify",
        [](std::uint64_t seed, int jobs) {
            RunConfig cfg;
            cfg.seed = seed;
            cfg.jobs = jobs;
            py::gil_scoped_release release;
            return cmd_verify(cfg).to_json().dump();
        },
        py::arg("seed"), py::arg("jobs"));
}
