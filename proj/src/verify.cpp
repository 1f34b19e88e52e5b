#include "godel/verify.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <sstream>

#include "godel/causality.hpp"
#include "godel/errors.hpp"
#include "godel/io.hpp"
#include "godel/observables.hpp"
#include "godel/oracle.hpp"
#include "godel/parallel.hpp"
#include "godel/random.hpp"
#include "godel/spectrum.hpp"

namespace godel {

using nlohmann::json;

namespace {

double const pi = std::numbers::pi;

Rng
stream_for(VerifyContext const& ctx, int id)
{
    return Rng(ctx.seed ^ (0x9E3779B97F4A7C15ULL * static_cast<std::uint64_t>(id)));
}

/// Finite doubles as numbers, the rest as strings, so reports stay valid JSON.
json
num(double v)
{
    if (std::isfinite(v)) {
        return v;
    }
    return std::isnan(v) ? "nan" : (v > 0 ? "inf" : "-inf");
}

std::string
fmt(double v)
{
    std::ostringstream s;
    s.precision(3);
    s << std::scientific << v;
    return s.str();
}

double
rel_err(double got, double want)
{
    return std::abs(got - want) / std::max(std::abs(want), std::numeric_limits<double>::min());
}

/// Least-squares slope of log y against log x.
double
loglog_slope(std::vector<double> const& x, std::vector<double> const& y)
{
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    double const n = static_cast<double>(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        double const lx = std::log(x[i]);
        double const ly = std::log(y[i]);
        sx += lx;
        sy += ly;
        sxx += lx * lx;
        sxy += lx * ly;
    }
    return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

std::vector<double>
half_integers(double m_max)
{
    std::vector<double> out;
    int const j_max = static_cast<int>(std::floor(2.0 * m_max + 1e-9));
    for (int j = -j_max; j <= j_max; ++j) {
        if (std::abs(j % 2) == 1) {
            out.push_back(0.5 * j);
        }
    }
    return out;
}

/// Check 1 and 2 share everything but the monopole.
CheckResult
inertial_table(int id, std::string name, std::int64_t defects)
{
    CheckResult r;
    r.id   = id;
    r.name = std::move(name);

    GeometryParams const p{};
    FluxConfig const f{};
    MonopoleConfig const c{defects};
    double const g2 = c.charge() * c.charge();

    double worst    = 0.0;
    int states      = 0;
    int flag_errors = 0;
    int sub_gap     = 0;
    json bad        = json::array();
    for (int n = 0; n <= 4; ++n) {
        for (double m : half_integers(3.5)) {
            QuantumNumbers const q{n, m, KPoint::plus};
            SpectrumResult const s = solve_spectrum(q, p, f, c);
            double const a         = n + std::abs(m) + 0.5;
            bool const below       = a * a < g2;
            ++states;
            sub_gap += below ? 1 : 0;
            if (below == s.valid) {
                ++flag_errors;
                bad.push_back({{"n", n}, {"m", m}, {"issue", "sub-gap flag"}});
                continue;
            }
            if (below) {
                continue;
            }
            double const want = std::sqrt(a * a - g2);
            double const ep   = s.eps_plus.real();
            double const em   = s.eps_minus.real();
            double const err  = want == 0.0 ? std::max(std::abs(ep), std::abs(em))
                                            : std::max(rel_err(ep, want), rel_err(em, -want));
            worst = std::max(worst, err);
            if (!(err < 1e-12)) {
                bad.push_back({{"n", n}, {"m", m}, {"eps_plus", num(ep)}, {"expected", want}, {"rel_err", num(err)}});
            }
        }
    }
    r.passed  = worst < 1e-12 && flag_errors == 0;
    r.metrics = {{"states", states}, {"max_rel_err", worst}, {"sub_gap_states", sub_gap},
                 {"flag_errors", flag_errors}};
    r.tables["failures"] = bad;
    r.detail = "max rel err " + fmt(worst) + " over " + std::to_string(states) + " states, " +
               std::to_string(sub_gap) + " sub-gap";
    return r;
}

} // namespace

CheckResult
check_inertial_defect_spectrum(VerifyContext const&)
{
    return inertial_table(1, "inertial defect spectrum", c60_defects);
}

CheckResult
check_topological_insulator_limit(VerifyContext const&)
{
    return inertial_table(2, "topological insulator limit", 0);
}

CheckResult
check_oracle_agreement(VerifyContext const& ctx)
{
    struct Entry
    {
        double omega, alpha, phi, m;
        int n;
        Branch branch;
    };
    std::vector<Entry> grid;
    for (double w : {0.0, 0.02, 0.05, 0.1, 0.2}) {
        for (double a : {0.8, 1.0}) {
            for (double phi : {0.0, 0.3}) {
                for (double m : {-1.5, -0.5, 0.5, 1.5}) {
                    for (int n = 1; n <= 3; ++n) {
                        for (Branch b : {Branch::plus, Branch::minus}) {
                            grid.push_back({w, a, phi, m, n, b});
                        }
                    }
                }
            }
        }
    }

    struct Row
    {
        bool formula_valid{false};
        bool agree{false};
        std::string status;
        double lambda_formula{0}, lambda_oracle{0}, delta{0}, match{0}, q_oracle{0}, det_formula{0};
        int nodes{-1};
    };

    MonopoleConfig const c{c60_defects};
    auto const rows = parallel_map(grid.size(), ctx.jobs, [&](std::size_t i) {
        Entry const& e = grid[i];
        GeometryParams p;
        p.alpha = e.alpha;
        p.omega = e.omega;
        FluxConfig const f{2.0 * pi * e.phi};
        QuantumNumbers const q{e.n, e.m, KPoint::plus};

        Row row;
        SpectrumResult const s = solve_spectrum(q, p, f, c);
        if (!s.valid) {
            row.status = "formula_complex";
            return row;
        }
        row.formula_valid  = true;
        row.lambda_formula = s.lambda(e.branch).real();
        row.det_formula    = matching_determinant(row.lambda_formula, q, p, f, c);
        try {
            OracleEigenvalue const o = shoot_eigenvalue(q, p, f, c, {}, e.branch);
            row.lambda_oracle        = o.lambda;
            row.match                = o.match_residual;
            row.nodes                = o.node_count;
            row.delta                = o.lambda - row.lambda_formula;
            row.q_oracle             = quantization_residual(o.lambda, q, p, f, c);
            row.agree                = std::abs(row.delta) < 1e-6;
            row.status               = row.agree ? "agree" : "disagree";
        } catch (NoBracket const&) {
            row.status = "no_bracket";
        } catch (StiffFailure const&) {
            row.status = "stiff";
        }
        return row;
    });

    int checked = 0, agree = 0, checked0 = 0, agree0 = 0;
    double worst0 = 0.0;
    json table    = json::array();
    for (std::size_t i = 0; i < grid.size(); ++i) {
        Entry const& e = grid[i];
        Row const& r   = rows[i];
        if (!r.formula_valid) {
            continue;
        }
        ++checked;
        agree += r.agree ? 1 : 0;
        if (e.omega == 0.0) {
            ++checked0;
            agree0 += r.agree ? 1 : 0;
            worst0 = std::max(worst0, r.status == "agree" || r.status == "disagree"
                                          ? std::abs(r.delta)
                                          : std::numeric_limits<double>::infinity());
        }
        if (!r.agree) {
            table.push_back({
                {"Omega", e.omega},
                {"alpha", e.alpha},
                {"Phi_B_over_2pi", e.phi},
                {"m", e.m},
                {"n", e.n},
                {"branch", to_string(e.branch)},
                {"lambda_formula", r.lambda_formula},
                {"lambda_oracle", num(r.lambda_oracle)},
                {"delta", num(r.delta)},
                {"match_residual", num(r.match)},
                {"node_count", r.nodes},
                {"Q_at_oracle", num(r.q_oracle)},
                {"det_at_formula", num(r.det_formula)},
                {"status", r.status},
            });
        }
    }

    CheckResult res;
    res.id     = 3;
    res.name   = "oracle agreement";
    res.passed = checked0 > 0 && agree0 == checked0;
    res.metrics = {{"roots_checked", checked}, {"roots_agreeing", agree}, {"omega0_checked", checked0},
                   {"omega0_agreeing", agree0}, {"omega0_max_abs_delta", num(worst0)}};
    res.tables["oracle_vs_formula"] = table;
    res.detail = "Omega=0: " + std::to_string(agree0) + "/" + std::to_string(checked0) + " roots within 1e-6 (max |dl| " +
                 fmt(worst0) + "); all Omega: " + std::to_string(agree) + "/" + std::to_string(checked);
    return res;
}

CheckResult
check_printed_discrepancy(VerifyContext const&)
{
    MonopoleConfig const c{c60_defects};
    double worst0 = 0.0;
    double max_q  = 0.0;
    json table    = json::array();
    int states    = 0;
    for (double alpha : {0.8, 1.0, 1.25}) {
        for (double phi : {0.0, 0.3}) {
            for (int n = 0; n <= 3; ++n) {
                for (double m : half_integers(2.5)) {
                    QuantumNumbers const q{n, m, KPoint::plus};
                    FluxConfig const f{2.0 * pi * phi};
                    GeometryParams p;
                    p.alpha = alpha;

                    SpectrumResult const a0 = solve_spectrum(q, p, f, c);
                    SpectrumResult const b0 = printed_spectrum(q, p, f, c);
                    worst0 = std::max({worst0, std::abs(a0.lambda_plus - b0.lambda_plus),
                                       std::abs(a0.lambda_minus - b0.lambda_minus)});

                    p.omega                 = 0.1;
                    SpectrumResult const a1 = solve_spectrum(q, p, f, c);
                    SpectrumResult const b1 = printed_spectrum(q, p, f, c);
                    double const qp = std::abs(quantization_residual(b1.lambda_plus, q, p, f, c));
                    double const qm = std::abs(quantization_residual(b1.lambda_minus, q, p, f, c));
                    max_q           = std::max({max_q, qp, qm});
                    ++states;
                    table.push_back({
                        {"alpha", alpha},
                        {"Phi_B_over_2pi", phi},
                        {"n", n},
                        {"m", m},
                        {"lambda_plus", num(a1.lambda_plus.real())},
                        {"lambda_plus_printed", num(b1.lambda_plus.real())},
                        {"lambda_minus", num(a1.lambda_minus.real())},
                        {"lambda_minus_printed", num(b1.lambda_minus.real())},
                        {"abs_Q_printed_plus", num(qp)},
                        {"abs_Q_printed_minus", num(qm)},
                    });
                }
            }
        }
    }
    CheckResult r;
    r.id      = 4;
    r.name    = "printed formula discrepancy";
    r.passed  = worst0 <= 1e-10 && max_q > 1e-8;
    r.metrics = {{"states", states}, {"omega0_max_abs_diff", worst0}, {"omega0p1_max_abs_Q_printed", num(max_q)}};
    r.tables["printed_vs_authoritative_omega0p1"] = table;
    r.detail = "Omega=0 max |diff| " + fmt(worst0) + "; Omega=0.1 max |Q(lambda_printed)| " + fmt(max_q);
    return r;
}

CheckResult
check_slow_rotation_order(VerifyContext const& ctx)
{
    Rng rng = stream_for(ctx, 5);
    MonopoleConfig const c{c60_defects};
    std::vector<double> omegas;
    for (int i = 0; i <= 8; ++i) {
        omegas.push_back(std::pow(10.0, -4.0 + 2.0 * i / 8.0));
    }

    json table    = json::array();
    bool ok       = true;
    double lo     = std::numeric_limits<double>::infinity();
    double hi     = -lo;
    int tuples    = 0;
    while (tuples < 10) {
        int const n        = static_cast<int>(rng.integer(0, 3));
        double const m     = 0.5 * static_cast<double>(2 * rng.integer(-3, 2) + 1);
        double const alpha = rng.uniform(0.7, 1.3);
        double const phi   = rng.uniform();
        GeometryParams p;
        p.alpha = alpha;
        FluxConfig const f{2.0 * pi * phi};
        QuantumNumbers const q{n, m, KPoint::plus};
        ReducedAngular const red = reduced_angular(q, p, f, c);
        double const ga          = c.charge() / alpha;
        if (red.a * red.a - ga * ga < 0.25) {
            continue;
        }
        ++tuples;

        std::vector<double> dp, dm;
        for (double w : omegas) {
            p.omega                = w;
            SpectrumResult const s = solve_spectrum(q, p, f, c);
            SpectrumResult const t = slow_rotation_spectrum(q, p, f, c);
            dp.push_back(std::abs(s.lambda_plus.real() - t.lambda_plus.real()));
            dm.push_back(std::abs(s.lambda_minus.real() - t.lambda_minus.real()));
        }
        double const sp = loglog_slope(omegas, dp);
        double const sm = loglog_slope(omegas, dm);
        lo              = std::min({lo, sp, sm});
        hi              = std::max({hi, sp, sm});
        ok              = ok && std::abs(sp - 2.0) <= 0.1 && std::abs(sm - 2.0) <= 0.1;
        table.push_back({{"n", n}, {"m", m}, {"alpha", alpha}, {"Phi_B_over_2pi", phi}, {"slope_plus", num(sp)},
                         {"slope_minus", num(sm)}});
    }
    CheckResult r;
    r.id                = 5;
    r.name              = "slow rotation order";
    r.passed            = ok;
    r.metrics           = {{"tuples", tuples}, {"min_slope", num(lo)}, {"max_slope", num(hi)}};
    r.tables["slopes"]  = table;
    r.detail            = "log-log slopes in [" + fmt(lo) + ", " + fmt(hi) + "]";
    return r;
}

CheckResult
check_byers_yang(VerifyContext const& ctx)
{
    Rng rng = stream_for(ctx, 6);
    json table        = json::array();
    double worst      = 0.0;
    int configs       = 0;
    int attempts      = 0;
    while (configs < 30 && attempts < 10000) {
        ++attempts;
        GeometryParams p;
        p.alpha  = rng.uniform(0.7, 1.3);
        p.omega  = rng.uniform(0.0, 0.2);
        p.radius = rng.uniform(0.5, 2.0);
        MonopoleConfig const c{std::array<std::int64_t, 3>{0, 4, 12}[rng.integer(0, 2)]};
        FluxConfig const f{2.0 * pi * rng.uniform()};
        LevelSet ls;
        ls.n_max  = static_cast<int>(rng.integer(1, 3));
        ls.m_max  = 0.5 * static_cast<double>(2 * rng.integer(0, 2) + 1);
        ls.branch = rng.uniform() < 0.5 ? Branch::minus : Branch::plus;

        // smooth: no |mt| cusp and no level near the real-axis boundary
        bool smooth = true;
        for (auto const& [n, m] : ls.states()) {
            QuantumNumbers const q{n, m, KPoint::plus};
            SpectrumResult const s = solve_spectrum(q, p, f, c);
            if (std::abs(reduced_angular(q, p, f, c).mtilde) < 0.02 || std::abs(s.discriminant) < 0.05) {
                smooth = false;
                break;
            }
        }
        if (!smooth) {
            continue;
        }
        ++configs;
        CurrentResult const cr = persistent_current(ls, p, f, c);
        double const err       = std::abs(cr.i_analytic - cr.i_fd) / std::max(1.0, std::abs(cr.i_fd));
        worst                  = std::max(worst, err);
        table.push_back({{"alpha", p.alpha}, {"Omega", p.omega}, {"R", p.radius}, {"defects", c.defects},
                         {"Phi_B", f.flux}, {"n_max", ls.n_max}, {"m_max", ls.m_max},
                         {"branch", to_string(ls.branch)}, {"I_analytic", cr.i_analytic}, {"I_fd", cr.i_fd},
                         {"rel_err", err}});
    }

    double worst_zero = 0.0;
    for (double alpha : {0.8, 1.0, 1.2}) {
        for (int n_max = 1; n_max <= 3; ++n_max) {
            for (double m_max : {1.5, 2.5, 3.5}) {
                for (Branch b : {Branch::plus, Branch::minus}) {
                    GeometryParams p;
                    p.alpha = alpha;
                    LevelSet ls;
                    ls.n_max               = n_max;
                    ls.m_max               = m_max;
                    ls.branch              = b;
                    CurrentResult const cr = persistent_current(ls, p, {}, MonopoleConfig{c60_defects});
                    worst_zero             = std::max(worst_zero, std::abs(cr.i_analytic));
                }
            }
        }
    }

    CheckResult r;
    r.id     = 6;
    r.name   = "Byers-Yang consistency";
    r.passed = configs == 30 && worst < 1e-6 && worst_zero <= 1e-10;
    r.metrics = {{"configs", configs}, {"max_rel_err", worst}, {"max_abs_I_at_zero_flux", worst_zero}};
    r.tables["configs"] = table;
    r.detail = "max rel err " + fmt(worst) + " over " + std::to_string(configs) + " configs; |I(0)| <= " +
               fmt(worst_zero);
    return r;
}

CheckResult
check_geometry_suite(VerifyContext const& ctx)
{
    Rng rng = stream_for(ctx, 7);
    struct Combo
    {
        double alpha, omega, radius;
    };
    std::vector<Combo> combos;
    double const radii[] = {1.0, 1.3, 0.7};
    int idx              = 0;
    for (double alpha : {0.8, 1.0, 1.2}) {
        for (double omega : {0.0, 0.05, 0.1}) {
            combos.push_back({alpha, omega, radii[idx++ % 3]});
        }
    }
    std::vector<double> const hs{4e-3, 2e-3, 1e-3};

    double worst_ortho = 0.0;
    int order_ok       = 0;
    int points         = 0;
    json table         = json::array();
    for (Combo const& cb : combos) {
        GeometryParams p;
        p.alpha  = cb.alpha;
        p.omega  = cb.omega;
        p.radius = cb.radius;
        double omin = std::numeric_limits<double>::infinity(), omax = -omin;
        double tmin = omin, tmax = -omin;
        int combo_ok = 0;
        for (int k = 0; k < 20; ++k) {
            double const th = rng.uniform(0.2, pi - 0.2);
            ++points;

            Tetrad const t     = tetrad_at(p, th);
            MetricSample const g = metric_at(p, th);
            Matrix3 eta        = Matrix3::Zero();
            eta.diagonal() << -1.0, 1.0, 1.0;
            double const scale = std::max(1.0, g.g.cwiseAbs().maxCoeff());
            worst_ortho        = std::max({worst_ortho, (t.e.transpose() * eta * t.e - g.g).cwiseAbs().maxCoeff() / scale,
                                           (t.einv * t.e - Matrix3::Identity()).cwiseAbs().maxCoeff()});

            std::vector<double> rc, rt;
            for (double h : hs) {
                rc.push_back(maurer_cartan_residual(p, th, h, ConnectionModel::closed_form));
                rt.push_back(maurer_cartan_residual(p, th, h, ConnectionModel::torsion_free));
            }
            double const oc = loglog_slope(hs, rc);
            double const ot = loglog_slope(hs, rt);
            omin            = std::min(omin, oc);
            omax            = std::max(omax, oc);
            tmin            = std::min(tmin, ot);
            tmax            = std::max(tmax, ot);
            if (std::abs(oc - 2.0) <= 0.1) {
                ++order_ok;
                ++combo_ok;
            }
        }
        table.push_back({{"alpha", cb.alpha}, {"Omega", cb.omega}, {"R", cb.radius}, {"points_order_2", combo_ok},
                         {"order_min", num(omin)}, {"order_max", num(omax)},
                         {"torsion_free_order_min", num(tmin)}, {"torsion_free_order_max", num(tmax)}});
    }
    CheckResult r;
    r.id      = 7;
    r.name    = "geometry suite";
    r.passed  = worst_ortho <= 1e-12 && order_ok == points;
    r.metrics = {{"points", points}, {"max_orthonormality_err", worst_ortho}, {"points_with_order_2", order_ok}};
    r.tables["maurer_cartan_order"] = table;
    r.detail = "orthonormality " + fmt(worst_ortho) + "; order 2.0+-0.1 at " + std::to_string(order_ok) + "/" +
               std::to_string(points) + " points";
    return r;
}

CheckResult
check_causality(VerifyContext const& ctx)
{
    Rng rng = stream_for(ctx, 8);
    std::vector<GodelClassParams> pairs;
    for (int i = 0; i < 200; ++i) {
        double const w = rng.uniform(0.1, 3.0);
        double l2      = rng.uniform(-4.0, 4.0);
        // exercise the boundaries of the sign rules
        if (i % 50 == 0) {
            l2 = 0.0;
        } else if (i % 50 == 1) {
            l2 = w * w;
        }
        pairs.push_back({w, l2});
    }

    int mismatches    = 0;
    double worst_root = 0.0;
    json bad          = json::array();
    for (auto const& gp : pairs) {
        CausalityReport const rep = classify(gp);
        int const samples         = 20000;
        int regions               = 0;
        bool prev_negative        = false;
        for (int i = 1; i <= samples; ++i) {
            double const rr  = rep.r_max * i / samples;
            bool const neg   = g_function(gp, rr) < 0.0;
            regions += neg && !prev_negative ? 1 : 0;
            prev_negative = neg;
        }
        CausalClass const sampled = regions == 0   ? CausalClass::no_ctc
                                    : regions == 1 ? CausalClass::one_noncausal_region
                                                   : CausalClass::alternating_regions;
        if (sampled != rep.causal_class) {
            ++mismatches;
            bad.push_back({{"Omega", gp.omega}, {"l2", gp.l2}, {"classified", to_string(rep.causal_class)},
                           {"sampled", to_string(sampled)}});
        }
        for (double rc : rep.critical_radii) {
            MetricFunctions const m = metric_functions(gp, rc);
            worst_root = std::max(worst_root, std::abs(g_function(gp, rc)) / std::max(1.0, m.d * m.d));
        }
    }

    GodelClassParams const godel{1.0, 0.5};
    CausalityReport const rep = classify(godel);
    double const lrc          = rep.critical_radii.empty() ? std::numeric_limits<double>::quiet_NaN()
                                                           : std::sqrt(godel.l2) * rep.critical_radii.front();
    double const godel_err    = std::abs(lrc - std::atanh(1.0 / std::sqrt(2.0)));
    bool const anchors = rep.causal_class == CausalClass::one_noncausal_region &&
                         rep.curvature_class == CurvatureClass::hyperbolic && rep.critical_radii.size() == 1 &&
                         classify({1.0, 2.0}).causal_class == CausalClass::no_ctc &&
                         classify({1.0, -1.0}).causal_class == CausalClass::alternating_regions;

    CheckResult r;
    r.id      = 8;
    r.name    = "causality classification";
    r.passed  = mismatches == 0 && godel_err <= 1e-10 && worst_root < 1e-12 && anchors;
    r.metrics = {{"pairs", pairs.size()}, {"mismatches", mismatches}, {"godel_l_rc", num(lrc)},
                 {"godel_abs_err", num(godel_err)}, {"max_scaled_G_at_roots", worst_root}};
    r.tables["mismatches"] = bad;
    r.detail = std::to_string(mismatches) + " mismatches in " + std::to_string(pairs.size()) +
               " pairs; Goedel l r_c error " + fmt(godel_err);
    return r;
}

CheckResult
check_flux_periodicity(VerifyContext const&)
{
    MonopoleConfig const c{c60_defects};
    double worst = 0.0;
    int compared = 0;
    for (double alpha : {0.8, 1.2}) {
        for (double omega : {0.0, 0.05}) {
            for (double flux : {0.0, 0.7, 2.1}) {
                GeometryParams p;
                p.alpha = alpha;
                p.omega = omega;
                FluxConfig const f0{flux};
                FluxConfig const f1{flux + 2.0 * pi};
                for (int n = 0; n <= 3; ++n) {
                    for (double m : half_integers(5.5)) {
                        SpectrumResult const a = solve_spectrum({n, m, KPoint::plus}, p, f0, c);
                        SpectrumResult const b = solve_spectrum({n, m + 1.0, KPoint::plus}, p, f1, c);
                        double const scale     = std::max(1.0, std::abs(a.lambda_plus));
                        worst = std::max({worst, std::abs(a.lambda_plus - b.lambda_plus) / scale,
                                          std::abs(a.lambda_minus - b.lambda_minus) / scale});
                        compared += 2;
                    }
                }
            }
        }
    }
    CheckResult r;
    r.id      = 9;
    r.name    = "flux periodicity";
    r.passed  = worst <= 1e-12;
    r.metrics = {{"levels", compared}, {"max_rel_diff", worst}};
    r.detail  = "max rel diff " + fmt(worst) + " over " + std::to_string(compared) + " levels";
    return r;
}

std::vector<std::function<CheckResult(VerifyContext const&)>> const&
verify_checks()
{
    static std::vector<std::function<CheckResult(VerifyContext const&)>> const all{
        check_inertial_defect_spectrum, check_topological_insulator_limit, check_oracle_agreement,
        check_printed_discrepancy,      check_slow_rotation_order,         check_byers_yang,
        check_geometry_suite,           check_causality,                   check_flux_periodicity,
    };
    return all;
}

namespace {

/// Diagnostics that carry no verdict: the quoted current and the second-order equation.
json
diagnostics(VerifyContext const& ctx)
{
    json current = json::array();
    MonopoleConfig const c{c60_defects};
    for (double omega : {0.0, 0.05, 0.1}) {
        for (double phi : {0.0, 0.3}) {
            for (Branch b : {Branch::plus, Branch::minus}) {
                GeometryParams p;
                p.omega = omega;
                LevelSet ls;
                ls.n_max               = 2;
                ls.m_max               = 2.5;
                ls.branch              = b;
                CurrentResult const cr = persistent_current(ls, p, FluxConfig{2.0 * pi * phi}, c);
                current.push_back({{"Omega", omega}, {"Phi_B_over_2pi", phi}, {"branch", to_string(b)},
                                   {"I_analytic", num(cr.i_analytic)}, {"I_printed", num(cr.i_printed)},
                                   {"abs_diff", num(std::abs(cr.i_printed - cr.i_analytic))}});
            }
        }
    }

    struct Case
    {
        double omega;
        std::int64_t defects;
        int n;
        double m;
    };
    std::vector<Case> const cases{{0.0, 0, 0, 0.5}, {0.0, 12, 1, 2.5}, {0.1, 0, 0, 0.5}, {0.1, 12, 1, 2.5}};
    auto const second = parallel_map(cases.size(), ctx.jobs, [&](std::size_t i) {
        Case const& k = cases[i];
        GeometryParams p;
        p.omega = k.omega;
        QuantumNumbers const q{k.n, k.m, KPoint::plus};
        MonopoleConfig const mc{k.defects};
        ShootingConfig cfg;
        cfg.rel_tol = 1e-13;
        cfg.abs_tol = 1e-15;
        OracleEigenvalue const o = shoot_eigenvalue(q, p, {}, mc, cfg, Branch::plus);
        double const res         = eigenfunction_residual(q, p, {}, mc, o.lambda, cfg);
        return json{{"Omega", k.omega}, {"defects", k.defects}, {"n", k.n}, {"m", k.m}, {"lambda", o.lambda},
                    {"second_order_residual", num(res)}};
    });

    return json{{"printed_current_vs_analytic", current}, {"second_order_residual", second}};
}

} // namespace

bool
VerifyReport::all_passed() const
{
    return std::all_of(checks.begin(), checks.end(), [](CheckResult const& c) { return c.passed; });
}

json
VerifyReport::to_json() const
{
    json list = json::array();
    json tables = json::object();
    for (auto const& c : checks) {
        list.push_back({{"id", c.id}, {"name", c.name}, {"passed", c.passed}, {"detail", c.detail},
                        {"metrics", c.metrics}});
        for (auto const& [k, v] : c.tables.items()) {
            tables[k] = v;
        }
    }
    for (auto const& [k, v] : diagnostics.items()) {
        tables[k] = v;
    }
    return json{{"schema", "godel-c60/verify"}, {"version", schema_version}, {"config", config},
                {"checks", list}, {"passed", all_passed()}, {"discrepancies", tables}};
}

VerifyReport
cmd_verify(RunConfig const& cfg)
{
    VerifyContext const ctx{cfg.seed, resolve_jobs(cfg.jobs)};
    VerifyReport rep;
    rep.config = {{"seed", cfg.seed}};
    for (auto const& check : verify_checks()) {
        rep.checks.push_back(check(ctx));
    }
    rep.diagnostics = diagnostics(ctx);
    return rep;
}

} // namespace godel
