#pragma once

/** \file observables.hpp
 *
 *  \brief Zero-temperature persistent current I = -sum d eps / d Phi_B over an explicit level set.
 *
 *  Three evaluations are carried side by side: implicit differentiation of the quantization
 *  polynomial (the headline value), the commonly quoted closed form, and a central difference of
 *  the occupied-level energy sum.
 */

#include <string>
#include <utility>
#include <vector>

#include "godel/spectrum.hpp"

namespace godel {

/// Which levels count as occupied. Enumeration order is n ascending, then m ascending.
struct LevelSet
{
    int n_max{3};
    /// |m| <= m_max on the lattice below.
    double m_max{2.5};
    Branch branch{Branch::minus};
    /// Drop states with a complex spectrum (otherwise they raise DomainError).
    bool skip_invalid{true};
    MLattice lattice{MLattice::half_integer};
    /// When non-empty, replaces the (n_max, m_max) window: (n, m) pairs in the given order.
    std::vector<std::pair<int, double>> explicit_states;

    /// Throws DomainError on n_max < 0, m_max < 0 or states off the lattice.
    void validate() const;

    /// (n, m) in enumeration order.
    std::vector<std::pair<int, double>> states() const;
};

struct LevelContribution
{
    int n{0};
    double m{0.0};
    double mtilde{0.0};
    double eps{0.0};
    /// d eps / d Phi_B from each side; equal unless cusp.
    OneSided deps;
    bool cusp{false};
};

struct CurrentResult
{
    double i_analytic{0.0};
    double i_printed{0.0};
    double i_fd{0.0};
    std::vector<LevelContribution> per_level;
    /// Levels skipped (complex spectrum), or present but excluded from i_fd.
    std::vector<std::string> warnings;
    /// Some level sits on the |mtilde| cusp; i_analytic uses the mean of the one-sided derivatives.
    bool cusp{false};

    std::size_t levels_used() const
    {
        return per_level.size();
    }
};

/// Step of the central flux difference used for i_fd.
inline constexpr double current_fd_step = 1e-5;

CurrentResult persistent_current(LevelSet const& ls, GeometryParams const& p, FluxConfig const& f,
                                 MonopoleConfig const& c);

struct SlowRotationCurrent
{
    double value{0.0};
    std::size_t levels_used{0};
    std::vector<std::string> warnings;
};

/// (hbar vF / 2 pi alpha R) sum {2 Omega + A / sqrt(A^2 - g^2/alpha^2)}; levels with A^2 <= g^2/alpha^2
/// are excluded with a warning.
SlowRotationCurrent slow_rotation_current(LevelSet const& ls, GeometryParams const& p, FluxConfig const& f,
                                          MonopoleConfig const& c);

/// One term of the quoted closed-form current, (hbar vF / 2 pi alpha R) {2 Omega + [(1 - 8 Omega^2) A
/// + 2 Omega^2 B] / sqrt(2 B^2 Omega^2 - (1 - 8 Omega^2)(g^2/alpha^2 - A^2))}, evaluated as written.
double printed_current_term(QuantumNumbers const& q, GeometryParams const& p, FluxConfig const& f,
                            MonopoleConfig const& c);

} // namespace godel
