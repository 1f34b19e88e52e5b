#pragma once

/** \file spectrum.hpp
 *
 *  \brief Closed-form eigenvalue machinery for the rotating, defected sphere.
 *
 *  With lambda = eps R / hbar, mt = m - Phi_B/2pi, A = n + |mt|/alpha + 1/2 and
 *  B = (mt + g)/alpha + 1/2, termination of the hypergeometric series requires
 *
 *      Q(lambda) = (1 - 8 Omega^2) lambda^2 - 2 Omega [1 + 2 (mt + g)/alpha] lambda - A^2 + g^2/alpha^2 = 0.
 *
 *  solve_spectrum returns the roots of Q and is the reference spectrum. printed_spectrum evaluates the
 *  commonly quoted closed form of those roots term by term; it carries a factor 2 instead of 4 in
 *  front of B^2 Omega^2 under the square root and is kept only to quantify that difference.
 */

#include <complex>
#include <string>

#include "godel/gauge.hpp"
#include "godel/geometry.hpp"

namespace godel {

/// Spacing of admissible m values. Results for the two lattices are never mixed.
enum class MLattice
{
    half_integer,
    integer,
};

enum class Branch
{
    plus,
    minus,
};

struct QuantumNumbers
{
    /// Hypergeometric truncation index, n >= 0.
    int n{0};
    /// Angular quantum number; a multiple of 1/2.
    double m{0.5};
    KPoint k{KPoint::plus};

    /// Throws DomainError on n < 0 or m not a multiple of 1/2.
    void validate() const;
    /// As validate(), and additionally requires m to sit on `lattice`.
    void validate(MLattice lattice) const;
};

struct ReducedAngular
{
    double mtilde{0.0}; ///< m - Phi_B/2pi
    double a{0.0};      ///< n + |mtilde|/alpha + 1/2
    double b{0.0};      ///< (mtilde + g)/alpha + 1/2
};

struct AnsatzExponents
{
    double c_plus{0.0};
    double c_minus{0.0};
};

struct SpectrumResult
{
    std::complex<double> lambda_plus;
    std::complex<double> lambda_minus;
    std::complex<double> eps_plus;
    std::complex<double> eps_minus;
    /// b^2 - 4ac of the quadratic in lambda (printed_spectrum: the radicand as printed).
    double discriminant{0.0};
    /// discriminant >= 0 and 1 - 8 Omega^2 > 0.
    bool valid{false};
    bool rotation_regular{true};
    /// |Q(lambda)| for each root.
    double residual_plus{0.0};
    double residual_minus{0.0};

    bool complex_spectrum() const
    {
        return discriminant < 0.0;
    }
    std::complex<double> lambda(Branch b) const
    {
        return b == Branch::plus ? lambda_plus : lambda_minus;
    }
    std::complex<double> eps(Branch b) const
    {
        return b == Branch::plus ? eps_plus : eps_minus;
    }
};

/// One-sided derivatives of eps with respect to Phi_B. They coincide away from the |mtilde| cusp.
struct OneSided
{
    double left{0.0};
    double right{0.0};

    double mean() const
    {
        return 0.5 * (left + right);
    }
};

struct FluxDerivative
{
    OneSided plus;
    OneSided minus;
    /// mtilde == 0: left and right differ.
    bool cusp{false};

    OneSided const& branch(Branch b) const
    {
        return b == Branch::plus ? plus : minus;
    }
};

ReducedAngular reduced_angular(QuantumNumbers const& q, GeometryParams const& p, FluxConfig const& f,
                               MonopoleConfig const& c);

/// C+- = 1/2 | mt/alpha +- (k + 2g/alpha)/2 -+ (Omega/2 alpha)(mt + g) |.
AnsatzExponents ansatz_exponents(QuantumNumbers const& q, GeometryParams const& p, FluxConfig const& f,
                                 MonopoleConfig const& c);

/// Q(lambda); independent of k.
double quantization_residual(double lambda, QuantumNumbers const& q, GeometryParams const& p,
                             FluxConfig const& f, MonopoleConfig const& c);

std::complex<double> quantization_residual(std::complex<double> lambda, QuantumNumbers const& q,
                                           GeometryParams const& p, FluxConfig const& f, MonopoleConfig const& c);

/// Roots of Q by a cancellation-free quadratic formula. Throws RotationSingular if 1 - 8 Omega^2 == 0.
SpectrumResult solve_spectrum(QuantumNumbers const& q, GeometryParams const& p, FluxConfig const& f,
                              MonopoleConfig const& c);

/// The quoted closed form with the 2 B^2 Omega^2 radicand, evaluated term by term.
SpectrumResult printed_spectrum(QuantumNumbers const& q, GeometryParams const& p, FluxConfig const& f,
                                MonopoleConfig const& c);

/// First order in Omega: eps = (hbar/2R){4 Omega B +- 2 sqrt(A^2 - g^2/alpha^2)}.
SpectrumResult slow_rotation_spectrum(QuantumNumbers const& q, GeometryParams const& p, FluxConfig const& f,
                                      MonopoleConfig const& c);

/// d eps / d Phi_B of both roots of Q by implicit differentiation. Throws DomainError unless the
/// spectrum at (q, p, f, c) is valid.
FluxDerivative spectrum_flux_derivative(QuantumNumbers const& q, GeometryParams const& p, FluxConfig const& f,
                                        MonopoleConfig const& c);

std::string to_string(Branch b);
std::string to_string(MLattice l);

} // namespace godel
