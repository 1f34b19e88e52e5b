#include "godel/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <limits>
#include <sstream>

#include <boost/math/tools/roots.hpp>
#include <boost/numeric/odeint.hpp>

#include "godel/errors.hpp"

namespace godel {

namespace odeint = boost::numeric::odeint;

namespace {

using State = std::array<double, 2>;

double const pi = std::numbers::pi;

/// Reduced couplings: a = g/alpha, mu = mt/alpha.
struct Couplings
{
    double a;
    double mu;
    double omega;
};

Couplings
couplings_of(QuantumNumbers const& q, GeometryParams const& p, FluxConfig const& f, MonopoleConfig const& c)
{
    q.validate();
    p.validate();
    return Couplings{c.charge() / p.alpha, (q.m - f.phi_frac()) / p.alpha, p.omega};
}

/// w_k(theta) in d psi^k/d theta = -w_k psi^k + i lambda psi^{-k}.
struct Weights
{
    double plus;
    double minus;
};

Weights
weights(Couplings const& cp, double lambda, double theta)
{
    double const st   = std::sin(theta);
    double const ct   = std::cos(theta);
    double const sh   = std::sin(0.5 * theta);
    double const cot  = ct / st;
    double const orb  = (cp.mu + 4.0 * cp.omega * lambda * sh * sh) / st;
    return Weights{(0.5 + cp.a) * cot - orb, (0.5 - cp.a) * cot + orb};
}

/// Real form (psi^+, chi) with psi^- = i chi.
struct RealSystem
{
    Couplings cp;
    double lambda;

    void operator()(State const& y, State& dy, double theta) const
    {
        Weights const w = weights(cp, lambda, theta);
        dy[0]           = -w.plus * y[0] - lambda * y[1];
        dy[1]           = -w.minus * y[1] + lambda * y[0];
    }
};

/// Leading Frobenius exponents at a pole for (psi^+, chi) and which component leads.
struct PoleRegime
{
    double e_plus;  ///< diagonal exponent of psi^+
    double e_minus; ///< diagonal exponent of chi
    bool plus_leads;
    double sigma; ///< +1 north, -1 south (sign of the lambda coupling in the local variable)
};

PoleRegime
north_regime(Couplings const& cp)
{
    return PoleRegime{cp.mu - cp.a - 0.5, cp.a - cp.mu - 0.5, cp.mu >= cp.a, 1.0};
}

PoleRegime
south_regime(Couplings const& cp, double lambda)
{
    double const mu_s = cp.mu + 4.0 * cp.omega * lambda;
    return PoleRegime{-(0.5 + cp.a + mu_s), cp.a + mu_s - 0.5, cp.a + mu_s <= 0.0, -1.0};
}

/// Regular solution at local distance s from the pole, divided by s^{leading exponent}.
State
seed(PoleRegime const& r, double lambda, double s)
{
    if (r.plus_leads) {
        return {1.0, r.sigma * lambda / (r.e_plus - r.e_minus + 1.0) * s};
    }
    return {-r.sigma * lambda / (r.e_minus - r.e_plus + 1.0) * s, 1.0};
}

double
norm(State const& y)
{
    return std::hypot(y[0], y[1]);
}

struct Leg
{
    State y;
    int sign_changes{0};
};

/// Integrates `y` from t0 to t1 with adaptive step control; optionally counts sign changes of psi^+.
Leg
integrate_leg(RealSystem const& sys, State y, double t0, double t1, double rel_tol, double abs_tol,
              bool count_nodes)
{
    double const span   = t1 - t0;
    double const dt0    = std::copysign(std::max(1e-3 * std::min(t0, pi - t0), 1e-12), span);
    double const max_dt = 0.05;

    Leg leg;
    double prev = y[0];
    auto observer = [&](State const& x, double) {
        if (!count_nodes) {
            return;
        }
        if (x[0] != 0.0) {
            if (prev != 0.0 && (x[0] > 0.0) != (prev > 0.0)) {
                ++leg.sign_changes;
            }
            prev = x[0];
        }
    };

    try {
        auto stepper = odeint::make_controlled(abs_tol, rel_tol, max_dt, odeint::runge_kutta_fehlberg78<State>());
        if (span >= 0.0) {
            odeint::integrate_adaptive(stepper, sys, y, t0, t1, dt0, observer);
        } else {
            // the step limiter assumes dt > 0, so run backwards legs in u = -theta
            auto reversed = [&sys](State const& x, State& dx, double u) {
                sys(x, dx, -u);
                dx[0] = -dx[0];
                dx[1] = -dx[1];
            };
            odeint::integrate_adaptive(stepper, reversed, y, -t0, -t1, -dt0, observer);
        }
    } catch (std::exception const& e) {
        throw StiffFailure(std::string("shooting integration failed: ") + e.what());
    }
    if (!std::isfinite(y[0]) || !std::isfinite(y[1])) {
        throw StiffFailure("shooting integration produced a non-finite state");
    }
    leg.y = y;
    return leg;
}

struct Shot
{
    double det;
    int nodes;
    State north;
    State south;
};

Shot
shoot_at(Couplings const& cp, double lambda, ShootingConfig const& cfg, bool count_nodes)
{
    RealSystem const sys{cp, lambda};
    State const yn = seed(north_regime(cp), lambda, cfg.theta_min);
    State const ys = seed(south_regime(cp, lambda), lambda, pi - cfg.theta_max);

    Leg const n = integrate_leg(sys, yn, cfg.theta_min, cfg.match_angle, cfg.rel_tol, cfg.abs_tol, count_nodes);
    Leg const s = integrate_leg(sys, ys, cfg.theta_max, cfg.match_angle, cfg.rel_tol, cfg.abs_tol, count_nodes);

    double const det = (n.y[0] * s.y[1] - n.y[1] * s.y[0]) / (norm(n.y) * norm(s.y));
    return Shot{det, n.sign_changes + s.sign_changes, n.y, s.y};
}

OracleEigenvalue
refine(Couplings const& cp, ShootingConfig const& cfg, double lo, double hi, double dlo, double dhi)
{
    auto f   = [&](double x) { return shoot_at(cp, x, cfg, false).det; };
    auto tol = [](double x, double y) { return std::abs(x - y) <= 4e-15 * std::max(1.0, std::abs(x)); };

    std::uintmax_t iters = static_cast<std::uintmax_t>(cfg.max_iter);
    auto const bracket   = boost::math::tools::toms748_solve(f, lo, hi, dlo, dhi, tol, iters);
    double const lambda  = 0.5 * (bracket.first + bracket.second);

    Shot const s = shoot_at(cp, lambda, cfg, true);
    return OracleEigenvalue{lambda, std::abs(s.det), s.nodes};
}

constexpr double accept_residual = 1e-8;

} // namespace

void
ShootingConfig::validate() const
{
    if (!(0.0 < theta_min && theta_min < match_angle && match_angle < theta_max && theta_max < pi)) {
        throw DomainError("ShootingConfig: need 0 < theta_min < match_angle < theta_max < pi");
    }
    if (!(rel_tol > 0.0) || !(abs_tol > 0.0) || max_iter < 1 || !(scan_density > 0.0)) {
        throw DomainError("ShootingConfig: tolerances, iteration cap and scan density must be positive");
    }
    if (bracket && !(bracket->first < bracket->second)) {
        throw DomainError("ShootingConfig: bracket must satisfy lo < hi");
    }
}

DiracState
rhs_first_order(double theta, DiracState const& psi, double lambda, QuantumNumbers const& q,
                GeometryParams const& p, FluxConfig const& f, MonopoleConfig const& c, ShootingConfig const& cfg)
{
    if (!(theta >= cfg.theta_min && theta <= cfg.theta_max)) {
        std::ostringstream s;
        s << "rhs_first_order: theta = " << theta << " is within the pole cutoff";
        throw DomainError(s.str());
    }
    Weights const w        = weights(couplings_of(q, p, f, c), lambda, theta);
    std::complex<double> const i(0.0, 1.0);
    return DiracState{-w.plus * psi[0] + i * lambda * psi[1], -w.minus * psi[1] + i * lambda * psi[0]};
}

PoleExponents
indicial_exponents(QuantumNumbers const& q, GeometryParams const& p, FluxConfig const& f, MonopoleConfig const& c,
                   double lambda)
{
    Couplings const cp = couplings_of(q, p, f, c);
    auto exponent_of   = [&](PoleRegime const& r) {
        double const lead = std::max(r.e_plus, r.e_minus);
        bool const want_plus = q.k == KPoint::plus;
        return want_plus == r.plus_leads ? lead : lead + 1.0;
    };
    return PoleExponents{exponent_of(north_regime(cp)), exponent_of(south_regime(cp, lambda))};
}

double
matching_determinant(double lambda, QuantumNumbers const& q, GeometryParams const& p, FluxConfig const& f,
                     MonopoleConfig const& c, ShootingConfig const& cfg)
{
    cfg.validate();
    return shoot_at(couplings_of(q, p, f, c), lambda, cfg, false).det;
}

double
scan_limit(QuantumNumbers const& q, GeometryParams const& p, FluxConfig const& f, MonopoleConfig const& c)
{
    Couplings const cp = couplings_of(q, p, f, c);
    double const mt    = q.m - f.phi_frac();
    double const wide  = (q.n + std::abs(cp.mu) + std::abs(cp.a) + 2.0) * (1.0 + 4.0 * std::abs(p.omega));
    return std::max(q.n + std::abs(mt) + 3.0, wide);
}

std::vector<OracleEigenvalue>
scan_eigenvalues(QuantumNumbers const& q, GeometryParams const& p, FluxConfig const& f, MonopoleConfig const& c,
                 ShootingConfig const& cfg, double lo, double hi)
{
    cfg.validate();
    if (!(lo < hi)) {
        throw DomainError("scan_eigenvalues: need lo < hi");
    }
    Couplings const cp = couplings_of(q, p, f, c);

    auto const samples = static_cast<int>(std::ceil((hi - lo) * cfg.scan_density)) + 1;
    std::vector<double> xs(samples);
    std::vector<double> ds(samples);
    for (int i = 0; i < samples; ++i) {
        xs[i] = lo + (hi - lo) * i / (samples - 1);
        ds[i] = shoot_at(cp, xs[i], cfg, false).det;
    }

    std::vector<OracleEigenvalue> out;
    for (int i = 0; i + 1 < samples; ++i) {
        if (ds[i] == 0.0) {
            Shot const s = shoot_at(cp, xs[i], cfg, true);
            out.push_back({xs[i], 0.0, s.nodes});
            continue;
        }
        if ((ds[i] > 0.0) == (ds[i + 1] > 0.0) || ds[i + 1] == 0.0) {
            continue;
        }
        OracleEigenvalue const e = refine(cp, cfg, xs[i], xs[i + 1], ds[i], ds[i + 1]);
        if (e.match_residual < accept_residual) {
            out.push_back(e);
        }
    }
    return out;
}

OracleEigenvalue
shoot_eigenvalue(QuantumNumbers const& q, GeometryParams const& p, FluxConfig const& f, MonopoleConfig const& c,
                 ShootingConfig const& cfg, Branch branch)
{
    cfg.validate();
    Couplings const cp = couplings_of(q, p, f, c);

    if (cfg.bracket) {
        auto const [lo, hi] = *cfg.bracket;
        double const dlo    = shoot_at(cp, lo, cfg, false).det;
        double const dhi    = shoot_at(cp, hi, cfg, false).det;
        if (dlo == 0.0 || dhi == 0.0) {
            double const x = dlo == 0.0 ? lo : hi;
            return OracleEigenvalue{x, 0.0, shoot_at(cp, x, cfg, true).nodes};
        }
        if ((dlo > 0.0) == (dhi > 0.0)) {
            throw NoBracket("shoot_eigenvalue: matching determinant has no sign change on the bracket");
        }
        OracleEigenvalue const e = refine(cp, cfg, lo, hi, dlo, dhi);
        if (e.match_residual >= accept_residual) {
            throw NoBracket("shoot_eigenvalue: sign change on the bracket is a discontinuity, not a root");
        }
        return e;
    }

    auto pick = [&](std::vector<OracleEigenvalue> const& roots) -> std::optional<OracleEigenvalue> {
        for (auto const& r : roots) {
            if (r.node_count == q.n) {
                return r;
            }
        }
        return std::nullopt;
    };

    // closed-form seed
    if (p.rotation_regular()) {
        SpectrumResult const s = solve_spectrum(q, p, f, c);
        if (!s.complex_spectrum()) {
            double const guess = s.lambda(branch).real();
            double const pad   = std::max(0.2 * std::abs(guess), 0.05);
            double lo          = guess - pad;
            double hi          = guess + pad;
            if (branch == Branch::plus) {
                lo = std::max(lo, 1e-6);
            } else {
                hi = std::min(hi, -1e-6);
            }
            if (lo < hi) {
                if (auto hit = pick(scan_eigenvalues(q, p, f, c, cfg, lo, hi))) {
                    return *hit;
                }
            }
        }
    }

    double const limit = scan_limit(q, p, f, c);
    auto const roots   = branch == Branch::plus ? scan_eigenvalues(q, p, f, c, cfg, 1e-6, limit)
                                                : scan_eigenvalues(q, p, f, c, cfg, -limit, -1e-6);
    if (auto hit = pick(roots)) {
        return *hit;
    }
    std::ostringstream s;
    s << "shoot_eigenvalue: no " << to_string(branch) << "-branch eigenvalue with " << q.n
      << " nodes within |lambda| <= " << limit;
    throw NoBracket(s.str());
}

ShootingSolution::ShootingSolution(QuantumNumbers const& q, GeometryParams const& p, FluxConfig const& f,
                                   MonopoleConfig const& c, double lambda, ShootingConfig const& cfg)
    : q_(q)
    , p_(p)
    , f_(f)
    , c_(c)
    , lambda_(lambda)
    , cfg_(cfg)
{
    cfg_.validate();
    Shot const s = shoot_at(couplings_of(q, p, f, c), lambda, cfg_, false);
    north_match_ = s.north;
    south_match_ = s.south;
    int const j  = std::abs(s.north[0]) >= std::abs(s.north[1]) ? 0 : 1;
    south_scale_ = s.north[j] / s.south[j];
}

namespace {

DiracState
to_dirac(State const& y, double scale)
{
    return DiracState{std::complex<double>(scale * y[0], 0.0), std::complex<double>(0.0, scale * y[1])};
}

/// One RK78 step of fixed size; its local error at h ~ 1e-4 is far below round-off.
State
fixed_step(RealSystem const& sys, State y, double t, double h)
{
    odeint::runge_kutta_fehlberg78<State> rk;
    rk.do_step(sys, y, t, h);
    return y;
}

} // namespace

DiracState
ShootingSolution::at(double theta) const
{
    Couplings const cp = couplings_of(q_, p_, f_, c_);
    RealSystem const sys{cp, lambda_};
    if (!(theta >= cfg_.theta_min && theta <= cfg_.theta_max)) {
        throw DomainError("ShootingSolution::at: theta within the pole cutoff");
    }
    if (theta <= cfg_.match_angle) {
        State const y0 = seed(north_regime(cp), lambda_, cfg_.theta_min);
        return to_dirac(integrate_leg(sys, y0, cfg_.theta_min, theta, cfg_.rel_tol, cfg_.abs_tol, false).y, 1.0);
    }
    State const y0 = seed(south_regime(cp, lambda_), lambda_, pi - cfg_.theta_max);
    return to_dirac(integrate_leg(sys, y0, cfg_.theta_max, theta, cfg_.rel_tol, cfg_.abs_tol, false).y, south_scale_);
}

std::array<DiracState, 3>
ShootingSolution::stencil(double theta, double h) const
{
    Couplings const cp = couplings_of(q_, p_, f_, c_);
    RealSystem const sys{cp, lambda_};
    if (!(theta - h > cfg_.theta_min && theta + h < cfg_.theta_max) || !(h > 0.0)) {
        throw DomainError("ShootingSolution::stencil: stencil leaves the integration range");
    }
    State const yn0 = seed(north_regime(cp), lambda_, cfg_.theta_min);
    State const ys0 = seed(south_regime(cp, lambda_), lambda_, pi - cfg_.theta_max);
    auto north_to = [&](double t) {
        return integrate_leg(sys, yn0, cfg_.theta_min, t, cfg_.rel_tol, cfg_.abs_tol, false).y;
    };
    auto south_to = [&](double t) {
        return integrate_leg(sys, ys0, cfg_.theta_max, t, cfg_.rel_tol, cfg_.abs_tol, false).y;
    };

    double const gap = std::abs(theta - cfg_.match_angle);
    if (gap <= 1e-12) {
        // straddles the glue: each side on its own trajectory, joined in psi^+ (or chi) at theta
        State const l = north_to(theta - h);
        State const c = fixed_step(sys, l, theta - h, h);
        State const r = south_to(theta + h);
        State const m = fixed_step(sys, r, theta + h, -h);
        int const j   = std::abs(c[0]) >= std::abs(c[1]) ? 0 : 1;
        double const s = c[j] / m[j];
        return {to_dirac(l, 1.0), to_dirac(c, 1.0), to_dirac(r, s)};
    }
    if (gap <= h) {
        throw DomainError("ShootingSolution::stencil: stencil partially overlaps the matching angle");
    }
    if (theta < cfg_.match_angle) {
        State const l = north_to(theta - h);
        State const c = fixed_step(sys, l, theta - h, h);
        State const r = fixed_step(sys, c, theta, h);
        return {to_dirac(l, 1.0), to_dirac(c, 1.0), to_dirac(r, 1.0)};
    }
    State const r = south_to(theta + h);
    State const c = fixed_step(sys, r, theta + h, -h);
    State const l = fixed_step(sys, c, theta, -h);
    return {to_dirac(l, south_scale_), to_dirac(c, south_scale_), to_dirac(r, south_scale_)};
}

double
eigenfunction_residual(QuantumNumbers const& q, GeometryParams const& p, FluxConfig const& f, MonopoleConfig const& c,
                       double lambda, ShootingConfig const& cfg, double h)
{
    ShootingConfig tight = cfg;
    tight.rel_tol        = std::min(cfg.rel_tol, 1e-12);
    tight.abs_tol        = std::min(cfg.abs_tol, 1e-14);
    ShootingSolution const sol(q, p, f, c, lambda, tight);

    Couplings const cp = couplings_of(q, p, f, c);
    double const k     = sign_of(q.k);
    int const comp     = q.k == KPoint::plus ? 0 : 1;
    double const a     = cp.a;
    double const mu    = cp.mu;
    double const w     = cp.omega;

    double worst_l   = 0.0;
    double worst_psi = 0.0;
    double const step = 0.1;
    for (int j = -13; j <= 13; ++j) {
        double const th = tight.match_angle + j * step;
        if (th < 0.2 || th > pi - 0.2) {
            continue;
        }
        auto const s3 = sol.stencil(th, h);
        std::complex<double> const pm = s3[0][comp];
        std::complex<double> const p0 = s3[1][comp];
        std::complex<double> const pp = s3[2][comp];

        double const st = std::sin(th);
        double const ct = std::cos(th);
        double const sh = std::sin(0.5 * th);

        std::complex<double> const d2 = (pp - 2.0 * p0 + pm) / (h * h);
        std::complex<double> const d1 = (pp - pm) / (2.0 * h);

        double const angular = (mu * mu - (k + 2.0 * a) * mu * ct + a * (a + k) + 0.25) / (st * st);
        double const rot =
            4.0 * w * lambda * sh * sh / st * (k + 2.0 * (mu - a * ct) + 4.0 * w * lambda * sh * sh);
        double const constant = lambda * lambda - 0.25 + a * a;

        std::complex<double> const l_psi = d2 + ct / st * d1 - angular * p0 + constant * p0 - rot * p0;
        worst_l                          = std::max(worst_l, std::abs(l_psi));
        worst_psi                        = std::max(worst_psi, std::abs(p0));
    }
    return worst_psi > 0.0 ? worst_l / worst_psi : std::numeric_limits<double>::infinity();
}

} // namespace godel
