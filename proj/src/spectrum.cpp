#include "godel/spectrum.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "godel/errors.hpp"

namespace godel {

namespace {

/// Coefficients of Q(lambda) = qa lambda^2 + qb lambda + qc.
struct Quadratic
{
    double qa;
    double qb;
    double qc;
    ReducedAngular red;
    double g_over_alpha;
};

Quadratic
quadratic_of(QuantumNumbers const& q, GeometryParams const& p, FluxConfig const& f, MonopoleConfig const& c)
{
    q.validate();
    p.validate();
    ReducedAngular const red = reduced_angular(q, p, f, c);
    double const ga          = c.charge() / p.alpha;
    return Quadratic{
        1.0 - 8.0 * p.omega * p.omega,
        -4.0 * p.omega * red.b, // -2 Omega [1 + 2 (mt + g)/alpha]
        ga * ga - red.a * red.a,
        red,
        ga,
    };
}

void
require_regular(double qa, char const* op)
{
    if (std::abs(qa) <= 4.0 * std::numeric_limits<double>::epsilon()) {
        throw RotationSingular(std::string(op) + ": 1 - 8 Omega^2 == 0");
    }
}

std::complex<double>
evaluate(Quadratic const& quad, std::complex<double> lambda)
{
    return (quad.qa * lambda + quad.qb) * lambda + quad.qc;
}

double
energy_scale(GeometryParams const& p)
{
    return p.hbar * p.vf / p.radius;
}

void
finish(SpectrumResult& r, Quadratic const& quad, GeometryParams const& p)
{
    double const scale = energy_scale(p);
    r.eps_plus         = scale * r.lambda_plus;
    r.eps_minus        = scale * r.lambda_minus;
    r.rotation_regular = p.rotation_regular();
    r.valid            = r.discriminant >= 0.0 && r.rotation_regular;
    r.residual_plus    = std::abs(evaluate(quad, r.lambda_plus));
    r.residual_minus   = std::abs(evaluate(quad, r.lambda_minus));
}

} // namespace

void
QuantumNumbers::validate() const
{
    if (n < 0) {
        throw DomainError("quantum number n must be non-negative");
    }
    if (!std::isfinite(m) || std::nearbyint(2.0 * m) != 2.0 * m) {
        std::ostringstream s;
        s << "quantum number m = " << m << " is not a multiple of 1/2";
        throw DomainError(s.str());
    }
}

void
QuantumNumbers::validate(MLattice lattice) const
{
    validate();
    bool const odd = static_cast<long long>(std::nearbyint(2.0 * m)) % 2 != 0;
    if (odd != (lattice == MLattice::half_integer)) {
        std::ostringstream s;
        s << "m = " << m << " is not on the " << to_string(lattice) << " lattice";
        throw DomainError(s.str());
    }
}

ReducedAngular
reduced_angular(QuantumNumbers const& q, GeometryParams const& p, FluxConfig const& f, MonopoleConfig const& c)
{
    ReducedAngular r;
    r.mtilde = q.m - f.phi_frac();
    r.a      = q.n + std::abs(r.mtilde) / p.alpha + 0.5;
    r.b      = (r.mtilde + c.charge()) / p.alpha + 0.5;
    return r;
}

AnsatzExponents
ansatz_exponents(QuantumNumbers const& q, GeometryParams const& p, FluxConfig const& f, MonopoleConfig const& c)
{
    p.validate();
    double const mt   = q.m - f.phi_frac();
    double const g    = c.charge();
    double const base = mt / p.alpha;
    double const spin = 0.5 * (sign_of(q.k) + 2.0 * g / p.alpha);
    double const rot  = p.omega / (2.0 * p.alpha) * (mt + g);
    return AnsatzExponents{
        0.5 * std::abs(base + spin - rot),
        0.5 * std::abs(base - spin + rot),
    };
}

double
quantization_residual(double lambda, QuantumNumbers const& q, GeometryParams const& p, FluxConfig const& f,
                      MonopoleConfig const& c)
{
    return evaluate(quadratic_of(q, p, f, c), lambda).real();
}

std::complex<double>
quantization_residual(std::complex<double> lambda, QuantumNumbers const& q, GeometryParams const& p,
                      FluxConfig const& f, MonopoleConfig const& c)
{
    return evaluate(quadratic_of(q, p, f, c), lambda);
}

SpectrumResult
solve_spectrum(QuantumNumbers const& q, GeometryParams const& p, FluxConfig const& f, MonopoleConfig const& c)
{
    Quadratic const quad = quadratic_of(q, p, f, c);
    require_regular(quad.qa, "solve_spectrum");

    SpectrumResult r;
    r.discriminant = quad.qb * quad.qb - 4.0 * quad.qa * quad.qc;

    if (r.discriminant >= 0.0) {
        double const sq = std::sqrt(r.discriminant);
        double r1       = 0.0;
        double r2       = 0.0;
        if (quad.qb == 0.0) {
            r1 = sq / (2.0 * quad.qa);
            r2 = -r1;
        } else {
            // larger-magnitude root first, the other from the product of roots
            double const t = -0.5 * (quad.qb + std::copysign(sq, quad.qb));
            r1             = t / quad.qa;
            r2             = t != 0.0 ? quad.qc / t : 0.0;
        }
        r.lambda_plus  = std::max(r1, r2);
        r.lambda_minus = std::min(r1, r2);
    } else {
        double const re = -quad.qb / (2.0 * quad.qa);
        double const im = std::abs(std::sqrt(-r.discriminant) / (2.0 * quad.qa));
        r.lambda_plus   = {re, im};
        r.lambda_minus  = {re, -im};
    }
    finish(r, quad, p);
    return r;
}

SpectrumResult
printed_spectrum(QuantumNumbers const& q, GeometryParams const& p, FluxConfig const& f, MonopoleConfig const& c)
{
    Quadratic const quad = quadratic_of(q, p, f, c);
    require_regular(quad.qa, "printed_spectrum");

    double const ga = quad.g_over_alpha;
    double const a  = quad.red.a;
    double const b  = quad.red.b;
    double const w  = p.omega;

    SpectrumResult r;
    r.discriminant = 2.0 * b * b * w * w - quad.qa * (ga * ga - a * a);

    std::complex<double> const root = std::sqrt(std::complex<double>(r.discriminant, 0.0));
    // eps = hbar / (2 R (1 - 8 Omega^2)) {4 Omega B +- 2 sqrt(...)}, lambda = eps R / hbar
    r.lambda_plus  = (4.0 * w * b + 2.0 * root) / (2.0 * quad.qa);
    r.lambda_minus = (4.0 * w * b - 2.0 * root) / (2.0 * quad.qa);
    if (r.discriminant >= 0.0 && r.lambda_plus.real() < r.lambda_minus.real()) {
        std::swap(r.lambda_plus, r.lambda_minus);
    }
    finish(r, quad, p);
    return r;
}

SpectrumResult
slow_rotation_spectrum(QuantumNumbers const& q, GeometryParams const& p, FluxConfig const& f,
                       MonopoleConfig const& c)
{
    Quadratic const quad = quadratic_of(q, p, f, c);
    double const ga      = quad.g_over_alpha;
    double const a       = quad.red.a;

    SpectrumResult r;
    r.discriminant = a * a - ga * ga;

    std::complex<double> const root = std::sqrt(std::complex<double>(r.discriminant, 0.0));
    double const shift              = 4.0 * p.omega * quad.red.b;
    r.lambda_plus                   = 0.5 * (shift + 2.0 * root);
    r.lambda_minus                  = 0.5 * (shift - 2.0 * root);
    finish(r, quad, p);
    return r;
}

FluxDerivative
spectrum_flux_derivative(QuantumNumbers const& q, GeometryParams const& p, FluxConfig const& f,
                         MonopoleConfig const& c)
{
    SpectrumResult const s = solve_spectrum(q, p, f, c);
    if (!s.valid) {
        throw DomainError("spectrum_flux_derivative: spectrum is not valid at this point");
    }
    Quadratic const quad = quadratic_of(q, p, f, c);
    double const mt      = quad.red.mtilde;
    double const two_pi  = 2.0 * std::numbers::pi;
    double const scale   = energy_scale(p);

    // d|mt|/dmt on the side where Phi_B decreases (left) and increases (right); mt = m - Phi_B/2pi
    bool const cusp   = std::abs(mt) <= 1e-12 * std::max(1.0, std::abs(q.m));
    double const s_l  = cusp ? 1.0 : (mt > 0.0 ? 1.0 : -1.0);
    double const s_r  = cusp ? -1.0 : s_l;

    auto deps = [&](double lambda, double sgn) {
        double const dq_dlambda = 2.0 * quad.qa * lambda + quad.qb;
        double const dq_dmt     = -4.0 * p.omega / p.alpha * lambda - 2.0 * quad.red.a * sgn / p.alpha;
        // dQ/dPhi = -(1/2pi) dQ/dmt
        return scale * dq_dmt / (two_pi * dq_dlambda);
    };

    FluxDerivative d;
    d.cusp  = cusp;
    d.plus  = {deps(s.lambda_plus.real(), s_l), deps(s.lambda_plus.real(), s_r)};
    d.minus = {deps(s.lambda_minus.real(), s_l), deps(s.lambda_minus.real(), s_r)};
    return d;
}

std::string
to_string(Branch b)
{
    return b == Branch::plus ? "plus" : "minus";
}

std::string
to_string(MLattice l)
{
    return l == MLattice::half_integer ? "half_integer" : "integer";
}

} // namespace godel
