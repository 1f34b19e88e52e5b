#pragma once

/** \file oracle.hpp
 *
 *  \brief Shooting eigensolver for the coupled first-order Dirac system on the sphere.
 *
 *  For the K-point pair (psi^+, psi^-) the system is
 *
 *      d psi^k / d theta = -[(1/2 + k g/alpha) cot(theta)
 *                            - (k / (alpha sin(theta))) (mt + 4 alpha Omega lambda sin^2(theta/2))] psi^k
 *                          + i lambda psi^{-k}
 *
 *  Both poles are regular singular points. The regular solution is seeded from its Frobenius
 *  expansion at each pole, integrated to the matching angle, and lambda is found as a zero of the
 *  normalized 2x2 matching determinant. lambda enters the coefficients, so every trial lambda is a
 *  fresh pair of integrations.
 *
 *  Writing psi^- = i chi turns the system real; everything below integrates (psi^+, chi).
 */

#include <array>
#include <complex>
#include <numbers>
#include <optional>
#include <utility>
#include <vector>

#include "godel/spectrum.hpp"

namespace godel {

struct ShootingConfig
{
    double theta_min{1e-6};
    double theta_max{std::numbers::pi - 1e-6};
    double rel_tol{1e-10};
    double abs_tol{1e-12};
    double match_angle{std::numbers::pi / 2};
    /// Explicit search interval. When empty, shoot_eigenvalue derives one (see there).
    std::optional<std::pair<double, double>> bracket;
    int max_iter{200};
    /// Samples per unit lambda for the fallback scan.
    double scan_density{20.0};

    /// Throws DomainError unless 0 < theta_min < match_angle < theta_max < pi and the tolerances are positive.
    void validate() const;
};

struct OracleEigenvalue
{
    double lambda{0.0};
    /// |det[Psi_left | Psi_right]| / (|Psi_left| |Psi_right|) at lambda.
    double match_residual{0.0};
    /// Sign changes of psi^+ on (theta_min, theta_max).
    int node_count{0};
};

using DiracState = std::array<std::complex<double>, 2>;

/// Right-hand side for the state (psi^+, psi^-). q.n and q.k are not used.
DiracState rhs_first_order(double theta, DiracState const& psi, double lambda, QuantumNumbers const& q,
                           GeometryParams const& p, FluxConfig const& f, MonopoleConfig const& c,
                           ShootingConfig const& cfg = {});

struct PoleExponents
{
    double north{0.0};
    double south{0.0};
};

/// Leading power of psi^{q.k} in the regular solution: psi^k ~ theta^north at theta -> 0 and
/// psi^k ~ (pi - theta)^south at theta -> pi. The south exponent depends on lambda when Omega != 0.
///
/// At each pole the regular solution is the Frobenius solution with the larger exponent; when the two
/// exponents coincide (|mt| = g), the solution led by psi^+ is taken.
PoleExponents indicial_exponents(QuantumNumbers const& q, GeometryParams const& p, FluxConfig const& f,
                                 MonopoleConfig const& c, double lambda = 0.0);

/// Signed, normalized matching determinant at lambda (a value in [-1, 1]).
double matching_determinant(double lambda, QuantumNumbers const& q, GeometryParams const& p,
                            FluxConfig const& f, MonopoleConfig const& c, ShootingConfig const& cfg = {});

/// Eigenvalue on `branch` with node count q.n.
///
/// With cfg.bracket set, the root inside it is returned (NoBracket without a sign change). Otherwise
/// the closed-form root of Q padded by 20% is tried first and kept only if its node count equals q.n;
/// failing that, the branch is scanned and the eigenvalue with q.n nodes is returned.
OracleEigenvalue shoot_eigenvalue(QuantumNumbers const& q, GeometryParams const& p, FluxConfig const& f,
                                  MonopoleConfig const& c, ShootingConfig const& cfg = {},
                                  Branch branch = Branch::plus);

/// All eigenvalues in [lo, hi] (sorted), found by a uniform scan of the matching determinant followed by
/// root refinement. Roots at which the determinant merely jumps (a change of pole regime) are dropped.
std::vector<OracleEigenvalue> scan_eigenvalues(QuantumNumbers const& q, GeometryParams const& p,
                                               FluxConfig const& f, MonopoleConfig const& c,
                                               ShootingConfig const& cfg, double lo, double hi);

/// Default scan half-width for the branch search.
double scan_limit(QuantumNumbers const& q, GeometryParams const& p, FluxConfig const& f, MonopoleConfig const& c);

/// Glued shooting solution: the north solution up to the matching angle, the south solution (scaled
/// to agree in psi^+ at the matching angle) beyond it.
class ShootingSolution
{
  public:
    ShootingSolution(QuantumNumbers const& q, GeometryParams const& p, FluxConfig const& f,
                     MonopoleConfig const& c, double lambda, ShootingConfig const& cfg = {});

    /// (psi^+, psi^-) at each of the three points theta - h, theta, theta + h, integrated on one
    /// trajectory so that second differences are free of step-control noise.
    std::array<DiracState, 3> stencil(double theta, double h) const;

    DiracState at(double theta) const;

  private:
    QuantumNumbers q_;
    GeometryParams p_;
    FluxConfig f_;
    MonopoleConfig c_;
    double lambda_;
    ShootingConfig cfg_;
    std::array<double, 2> north_match_;
    std::array<double, 2> south_match_;
    double south_scale_;
};

/// Residual of the second-order equation for psi^{q.k} obtained by combining the doublet, evaluated
/// by central differences (step h) of the glued shooting solution. Returned value is
/// max |L psi| / max |psi| over a fixed set of sample angles that includes the matching angle.
double eigenfunction_residual(QuantumNumbers const& q, GeometryParams const& p, FluxConfig const& f,
                              MonopoleConfig const& c, double lambda, ShootingConfig const& cfg = {},
                              double h = 1e-4);

} // namespace godel
