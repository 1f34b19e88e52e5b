#include "godel/observables.hpp"

#include <cmath>
#include <optional>
#include <sstream>

#include "godel/errors.hpp"

namespace godel {

namespace {

std::string
label(int n, double m)
{
    std::ostringstream s;
    s << "(n=" << n << ", m=" << m << ")";
    return s.str();
}

double
prefactor(GeometryParams const& p)
{
    return p.hbar * p.vf / (2.0 * std::numbers::pi * p.alpha * p.radius);
}

/// Energy on `b`, or nothing when the state has no real level there.
std::optional<double>
level_energy(QuantumNumbers const& q, GeometryParams const& p, FluxConfig const& f, MonopoleConfig const& c,
             Branch b)
{
    SpectrumResult const s = solve_spectrum(q, p, f, c);
    if (!s.valid) {
        return std::nullopt;
    }
    return s.eps(b).real();
}

} // namespace

void
LevelSet::validate() const
{
    if (explicit_states.empty()) {
        if (n_max < 0 || !(m_max >= 0.0)) {
            throw DomainError("LevelSet: n_max and m_max must be non-negative");
        }
        return;
    }
    for (auto const& [n, m] : explicit_states) {
        QuantumNumbers{n, m, KPoint::plus}.validate(lattice);
    }
}

std::vector<std::pair<int, double>>
LevelSet::states() const
{
    validate();
    if (!explicit_states.empty()) {
        return explicit_states;
    }
    std::vector<std::pair<int, double>> out;
    // m = j/2 with j odd (half-integer) or even (integer)
    int const j_max  = static_cast<int>(std::floor(2.0 * m_max + 1e-9));
    int const parity = lattice == MLattice::half_integer ? 1 : 0;
    for (int n = 0; n <= n_max; ++n) {
        for (int j = -j_max; j <= j_max; ++j) {
            if (std::abs(j % 2) == parity) {
                out.emplace_back(n, 0.5 * j);
            }
        }
    }
    return out;
}

double
printed_current_term(QuantumNumbers const& q, GeometryParams const& p, FluxConfig const& f, MonopoleConfig const& c)
{
    ReducedAngular const r = reduced_angular(q, p, f, c);
    double const w         = p.omega;
    double const ga        = c.charge() / p.alpha;
    double const rot       = 1.0 - 8.0 * w * w;
    double const num       = rot * r.a + 2.0 * w * w * r.b;
    double const den       = std::sqrt(2.0 * r.b * r.b * w * w - rot * (ga * ga - r.a * r.a));
    return prefactor(p) * (2.0 * w + num / den);
}

CurrentResult
persistent_current(LevelSet const& ls, GeometryParams const& p, FluxConfig const& f, MonopoleConfig const& c)
{
    p.validate();
    CurrentResult out;
    double e_up = 0.0;
    double e_dn = 0.0;
    FluxConfig const up{f.flux + current_fd_step};
    FluxConfig const dn{f.flux - current_fd_step};

    for (auto const& [n, m] : ls.states()) {
        QuantumNumbers const q{n, m, KPoint::plus};
        SpectrumResult const s = solve_spectrum(q, p, f, c);
        if (!s.valid) {
            if (!ls.skip_invalid) {
                throw DomainError("persistent_current: no real level at " + label(n, m));
            }
            out.warnings.push_back("skipped " + label(n, m) + ": complex spectrum");
            continue;
        }
        FluxDerivative const d = spectrum_flux_derivative(q, p, f, c);

        LevelContribution lc;
        lc.n      = n;
        lc.m      = m;
        lc.mtilde = reduced_angular(q, p, f, c).mtilde;
        lc.eps    = s.eps(ls.branch).real();
        lc.deps   = d.branch(ls.branch);
        lc.cusp   = d.cusp;

        out.i_analytic -= lc.deps.mean();
        out.i_printed += printed_current_term(q, p, f, c);
        if (lc.cusp) {
            out.cusp = true;
            out.warnings.push_back("cusp at " + label(n, m) + ": one-sided derivatives differ");
        } else if (std::abs(lc.mtilde) < current_fd_step / (2.0 * std::numbers::pi)) {
            out.warnings.push_back("flux difference at " + label(n, m) + " straddles the cusp");
        }

        auto const eu = level_energy(q, p, up, c, ls.branch);
        auto const ed = level_energy(q, p, dn, c, ls.branch);
        if (eu && ed) {
            e_up += *eu;
            e_dn += *ed;
        } else {
            out.warnings.push_back("excluded " + label(n, m) + " from the flux difference: level leaves the real axis");
        }
        out.per_level.push_back(lc);
    }
    out.i_fd = -(e_up - e_dn) / (2.0 * current_fd_step);
    return out;
}

SlowRotationCurrent
slow_rotation_current(LevelSet const& ls, GeometryParams const& p, FluxConfig const& f, MonopoleConfig const& c)
{
    p.validate();
    SlowRotationCurrent out;
    double const ga = c.charge() / p.alpha;
    for (auto const& [n, m] : ls.states()) {
        QuantumNumbers const q{n, m, KPoint::plus};
        q.validate();
        double const a   = reduced_angular(q, p, f, c).a;
        double const gap = a * a - ga * ga;
        if (!(gap > 0.0)) {
            out.warnings.push_back("excluded " + label(n, m) + ": A^2 <= g^2/alpha^2");
            continue;
        }
        out.value += prefactor(p) * (2.0 * p.omega + a / std::sqrt(gap));
        ++out.levels_used;
    }
    return out;
}

} // namespace godel
