#pragma once

/** \file commands.hpp
 *
 *  \brief The table-producing commands behind the command-line tool.
 *
 *  Sweep points are the Cartesian product of the configured axes, first axis outermost. Each
 *  point is evaluated on the worker pool and rows are emitted in sweep order.
 */

#include <ostream>
#include <vector>

#include "godel/config.hpp"
#include "godel/io.hpp"

namespace godel {

/// Configurations for every sweep point (one entry when there is no sweep).
std::vector<RunConfig> sweep_points(RunConfig const& cfg);

/// n, m, alpha, Omega, g, Phi_B, R, eps_plus, eps_minus, valid, discriminant, residual, status.
Table cmd_spectrum(RunConfig const& cfg);

/// Phi_B, I_analytic, I_printed, I_fd, n_levels_used, warnings. Only a flux sweep is accepted.
Table cmd_current(RunConfig const& cfg);

/// Omega, l2, causal_class, curvature_class, n_critical, critical_radii. Sweeps over omega and l2.
Table cmd_causality(RunConfig const& cfg);

/// Closed-form root against the shooting eigenvalue for every state and both branches.
Table cmd_oracle(RunConfig const& cfg);

/// Writes `t` in the configured format, to cfg.out or to `fallback` when no path is set.
void emit(RunConfig const& cfg, Table const& t, std::ostream& fallback);

} // namespace godel
