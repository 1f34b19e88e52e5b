#pragma once

/** \file verify.hpp
 *
 *  \brief Invariant suites behind `verify`: nine numbered checks plus the
 *         closed-form-versus-independent discrepancy tables.
 *
 *  Every check is deterministic for a given seed; randomized checks draw from their own stream
 *  derived from (seed, check id).
 */

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include <json.hpp>

#include "godel/config.hpp"

namespace godel {

struct CheckResult
{
    int id{0};
    std::string name;
    bool passed{false};
    std::string detail;
    nlohmann::json metrics = nlohmann::json::object();
    /// Tables backing the verdict (disagreements, per-point measurements).
    nlohmann::json tables = nlohmann::json::object();
};

struct VerifyReport
{
    std::vector<CheckResult> checks;
    nlohmann::json config;
    /// Measurements without a verdict (quoted current, second-order equation residuals).
    nlohmann::json diagnostics = nlohmann::json::object();

    bool all_passed() const;
    nlohmann::json to_json() const;
};

struct VerifyContext
{
    std::uint64_t seed{20240607};
    int jobs{1};
};

CheckResult check_inertial_defect_spectrum(VerifyContext const& ctx);
CheckResult check_topological_insulator_limit(VerifyContext const& ctx);
CheckResult check_oracle_agreement(VerifyContext const& ctx);
CheckResult check_printed_discrepancy(VerifyContext const& ctx);
CheckResult check_slow_rotation_order(VerifyContext const& ctx);
CheckResult check_byers_yang(VerifyContext const& ctx);
CheckResult check_geometry_suite(VerifyContext const& ctx);
CheckResult check_causality(VerifyContext const& ctx);
CheckResult check_flux_periodicity(VerifyContext const& ctx);

/// Checks 1..9 in order.
std::vector<std::function<CheckResult(VerifyContext const&)>> const& verify_checks();

/// Runs every check. Byte-identical output for identical configuration and seed.
VerifyReport cmd_verify(RunConfig const& cfg);

} // namespace godel
