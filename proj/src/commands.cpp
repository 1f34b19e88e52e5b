#include "godel/commands.hpp"

#include <cmath>
#include <fstream>
#include <set>

#include "godel/causality.hpp"
#include "godel/errors.hpp"
#include "godel/observables.hpp"
#include "godel/oracle.hpp"
#include "godel/parallel.hpp"
#include "godel/spectrum.hpp"

namespace godel {

namespace {

void
require_axes(RunConfig const& cfg, std::set<std::string> const& allowed, char const* command)
{
    for (auto const& a : cfg.sweep) {
        if (!allowed.contains(a.param)) {
            throw ConfigError(std::string(command) + ": cannot sweep '" + a.param + "'");
        }
    }
}

std::string
join(std::vector<std::string> const& parts, char const* sep)
{
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        out += (i ? sep : "") + parts[i];
    }
    return out;
}

double const nan = std::numeric_limits<double>::quiet_NaN();

} // namespace

std::vector<RunConfig>
sweep_points(RunConfig const& cfg)
{
    cfg.validate();
    std::vector<RunConfig> points{cfg};
    for (auto const& axis : cfg.sweep) {
        std::vector<RunConfig> next;
        for (auto const& base : points) {
            for (double v : axis.values()) {
                RunConfig c = base;
                set_parameter(c, axis.param, v);
                next.push_back(std::move(c));
            }
        }
        points = std::move(next);
    }
    for (auto& p : points) {
        p.sweep.clear();
        try {
            p.validate();
        } catch (ConfigError const& e) {
            throw ConfigError(std::string("sweep point: ") + e.what());
        }
    }
    return points;
}

Table
cmd_spectrum(RunConfig const& cfg)
{
    auto const points = sweep_points(cfg);
    auto const blocks = parallel_map(points.size(), resolve_jobs(cfg.jobs), [&](std::size_t i) {
        RunConfig const& pt = points[i];
        std::vector<std::vector<Cell>> rows;
        for (auto const& [n, m] : pt.levels.states()) {
            QuantumNumbers const q{n, m, KPoint::plus};
            std::vector<Cell> row{std::int64_t{n},  m,          pt.geometry.alpha, pt.geometry.omega,
                                  pt.monopole.charge(), pt.flux.flux, pt.geometry.radius};
            try {
                SpectrumResult const s = solve_spectrum(q, pt.geometry, pt.flux, pt.monopole);
                bool const real   = !s.complex_spectrum();
                std::string const status = s.valid ? "ok" : (real ? "supercritical" : "complex");
                row.insert(row.end(), {real ? s.eps_plus.real() : nan, real ? s.eps_minus.real() : nan, s.valid,
                                       s.discriminant, std::max(s.residual_plus, s.residual_minus), status});
            } catch (RotationSingular const&) {
                row.insert(row.end(), {nan, nan, false, nan, nan, std::string("rotation_singular")});
            }
            rows.push_back(std::move(row));
        }
        return rows;
    });

    Table t;
    t.schema  = "spectrum";
    t.columns = {"n", "m", "alpha", "Omega", "g", "Phi_B", "R", "eps_plus", "eps_minus", "valid", "discriminant",
                 "residual", "status"};
    for (auto const& b : blocks) {
        for (auto const& r : b) {
            t.add(r);
        }
    }
    return t;
}

Table
cmd_current(RunConfig const& cfg)
{
    require_axes(cfg, {"flux"}, "current");
    auto const points = sweep_points(cfg);
    auto const rows   = parallel_map(points.size(), resolve_jobs(cfg.jobs), [&](std::size_t i) {
        RunConfig const& pt = points[i];
        try {
            CurrentResult const r = persistent_current(pt.levels, pt.geometry, pt.flux, pt.monopole);
            return std::vector<Cell>{pt.flux.flux, r.i_analytic, r.i_printed, r.i_fd,
                                     static_cast<std::int64_t>(r.levels_used()), join(r.warnings, "; ")};
        } catch (RotationSingular const& e) {
            return std::vector<Cell>{pt.flux.flux, nan, nan, nan, std::int64_t{0}, std::string(e.what())};
        }
    });

    Table t;
    t.schema  = "current";
    t.columns = {"Phi_B", "I_analytic", "I_printed", "I_fd", "n_levels_used", "warnings"};
    for (auto const& r : rows) {
        t.add(r);
    }
    return t;
}

Table
cmd_causality(RunConfig const& cfg)
{
    require_axes(cfg, {"omega", "l2"}, "causality");
    auto const points = sweep_points(cfg);
    auto const rows   = parallel_map(points.size(), resolve_jobs(cfg.jobs), [&](std::size_t i) {
        RunConfig const& pt = points[i];
        GodelClassParams const gp{pt.geometry.omega, pt.l2};
        try {
            gp.validate();
        } catch (DomainError const& e) {
            throw ConfigError(std::string("causality: ") + e.what());
        }
        CausalityReport const rep = classify(gp);
        std::vector<std::string> radii;
        for (double r : rep.critical_radii) {
            radii.push_back(format_number(r));
        }
        return std::vector<Cell>{gp.omega, gp.l2, to_string(rep.causal_class), to_string(rep.curvature_class),
                                 static_cast<std::int64_t>(rep.critical_radii.size()), join(radii, ";")};
    });

    Table t;
    t.schema  = "causality";
    t.columns = {"Omega", "l2", "causal_class", "curvature_class", "n_critical", "critical_radii"};
    for (auto const& r : rows) {
        t.add(r);
    }
    return t;
}

Table
cmd_oracle(RunConfig const& cfg)
{
    struct Job
    {
        std::size_t point;
        int n;
        double m;
        Branch branch;
    };
    auto const points = sweep_points(cfg);
    std::vector<Job> jobs;
    for (std::size_t i = 0; i < points.size(); ++i) {
        for (auto const& [n, m] : points[i].levels.states()) {
            for (Branch b : {Branch::plus, Branch::minus}) {
                jobs.push_back({i, n, m, b});
            }
        }
    }

    auto const rows = parallel_map(jobs.size(), resolve_jobs(cfg.jobs), [&](std::size_t i) {
        Job const& j        = jobs[i];
        RunConfig const& pt = points[j.point];
        QuantumNumbers const q{j.n, j.m, KPoint::plus};
        std::vector<Cell> row{std::int64_t{j.n}, j.m, pt.geometry.alpha, pt.geometry.omega, pt.monopole.charge(),
                              pt.flux.flux, to_string(j.branch)};

        double formula     = nan;
        std::string status = "ok";
        try {
            SpectrumResult const s = solve_spectrum(q, pt.geometry, pt.flux, pt.monopole);
            formula                = s.valid ? s.lambda(j.branch).real() : nan;
        } catch (RotationSingular const&) {
            status = "rotation_singular";
        }
        try {
            OracleEigenvalue const o = shoot_eigenvalue(q, pt.geometry, pt.flux, pt.monopole, {}, j.branch);
            double const delta       = o.lambda - formula;
            if (status == "ok") {
                status = std::isnan(formula) ? "formula_complex" : (std::abs(delta) < 1e-6 ? "agree" : "disagree");
            }
            row.insert(row.end(), {formula, o.lambda, delta, o.match_residual,
                                   static_cast<std::int64_t>(o.node_count), status});
        } catch (NoBracket const&) {
            row.insert(row.end(), {formula, nan, nan, nan, std::int64_t{-1}, std::string("no_bracket")});
        } catch (StiffFailure const&) {
            row.insert(row.end(), {formula, nan, nan, nan, std::int64_t{-1}, std::string("stiff")});
        }
        return row;
    });

    Table t;
    t.schema  = "oracle";
    t.columns = {"n",      "m",     "alpha",          "Omega",         "g",          "Phi_B", "branch",
                 "lambda_formula", "lambda_oracle", "delta", "match_residual", "node_count", "status"};
    for (auto const& r : rows) {
        t.add(r);
    }
    return t;
}

void
emit(RunConfig const& cfg, Table const& t, std::ostream& fallback)
{
    std::ofstream file;
    std::ostream* out = &fallback;
    if (!cfg.out.empty()) {
        file.open(cfg.out, std::ios::binary);
        if (!file) {
            throw ConfigError("cannot write '" + cfg.out + "'");
        }
        out = &file;
    }
    if (cfg.format == OutputFormat::csv) {
        write_csv(t, *out);
    } else {
        // the worker count never changes results, so it stays out of the echoed config
        nlohmann::json echo = to_json(cfg);
        echo.erase("jobs");
        write_json(to_structured(t, echo), *out);
    }
}

} // namespace godel
