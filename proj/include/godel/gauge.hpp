#pragma once

/** \file gauge.hpp
 *
 *  \brief Fictitious monopole standing in for the conical singularities, its K-point
 *         diagonalization, and the Aharonov-Bohm flux potential.
 *
 *  The non-diagonal doublet form A_phi = g cos(theta) tau^2 is only used through its
 *  diagonalized scalars A_phi^k = k g cos(theta), k = +-1.
 */

#include <cstdint>
#include <numbers>

#include "godel/geometry.hpp"

namespace godel {

/// Monopole built from `defects` conical singularities; charge g = defects / 8.
struct MonopoleConfig
{
    std::int64_t defects{0};

    /// Exact for |defects| < 2^53 (division by a power of two).
    double charge() const
    {
        return static_cast<double>(defects) / 8.0;
    }
};

struct FluxConfig
{
    /// Aharonov-Bohm flux Phi_B.
    double flux{0.0};

    double phi_frac() const
    {
        return flux / (2.0 * std::numbers::pi);
    }
};

enum class KPoint : int
{
    plus  = 1,
    minus = -1,
};

inline int
sign_of(KPoint k)
{
    return static_cast<int>(k);
}

/// C60: twelve pentagons.
inline constexpr std::int64_t c60_defects = 12;

MonopoleConfig monopole_charge(std::int64_t defects);

/// A_phi^k = k g cos(theta).
double monopole_potential(MonopoleConfig const& c, KPoint k, double theta);

/// A_phi = Phi_B / 2 pi, independent of theta.
double ab_potential(FluxConfig const& f);

/// tau^2 acting on the K-point doublet.
Matrix2c tau2();

/// U = (1/sqrt 2) [[1, 1], [i, -i]]; U^dagger tau^2 U = diag(+1, -1).
Matrix2c diagonalizing_rotation();

} // namespace godel
