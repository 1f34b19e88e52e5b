#pragma once

/** \file causality.hpp
 *
 *  \brief Causality classes of the cylindrical Goedel-type family
 *
 *      ds^2 = -[dt + H(r) dphi]^2 + D(r)^2 dphi^2 + dr^2 + dz^2,
 *      H = (Omega/l^2) sinh^2(l r),  D = sinh(2 l r) / (2 l).
 *
 *  Closed timelike curves live where G = D^2 - H^2 < 0. For l^2 < 0 the functions are continued
 *  to H = Omega sin^2(kr)/k^2, D = sin(2kr)/(2k) with k^2 = -l^2, which under R = 1/(2k),
 *  theta = r/R are the g_tphi and g_phiphi components of the rotating sphere with alpha = 1.
 */

#include <optional>
#include <string>
#include <vector>

namespace godel {

struct GodelClassParams
{
    /// Vorticity, > 0.
    double omega{1.0};
    /// l^2, any sign.
    double l2{0.5};

    /// Throws DomainError unless omega > 0 and both fields are finite.
    void validate() const;
};

enum class CausalClass
{
    no_ctc,
    alternating_regions,
    one_noncausal_region,
};

enum class CurvatureClass
{
    flat,
    spherical,
    hyperbolic,
};

struct MetricFunctions
{
    double h{0.0};
    double d{0.0};
};

struct CausalitySample
{
    double r{0.0};
    double h{0.0};
    double d{0.0};
    double g{0.0};
};

struct CausalityReport
{
    CausalClass causal_class{CausalClass::no_ctc};
    CurvatureClass curvature_class{CurvatureClass::flat};
    /// Radii in (0, r_max] where G changes sign, ascending. Double zeros (G touching 0) are not listed.
    std::vector<double> critical_radii;
    std::vector<CausalitySample> samples;
    double r_max{0.0};
};

struct ClassifyOptions
{
    /// Search range for critical radii; defaults to three periods 3 pi / k for l^2 < 0 and to
    /// 3 max(r_c, 1/Omega) otherwise.
    std::optional<double> r_max;
    /// Number of (r, H, D, G) rows in the report, evenly spaced on [0, r_max].
    int samples{64};
};

/// Throws DomainError for r < 0.
MetricFunctions metric_functions(GodelClassParams const& gp, double r);

/// G = (D - H)(D + H).
double g_function(GodelClassParams const& gp, double r);

CausalClass causal_class_of(GodelClassParams const& gp);
CurvatureClass curvature_class_of(GodelClassParams const& gp);

CausalityReport classify(GodelClassParams const& gp, ClassifyOptions const& opts = {});

std::string to_string(CausalClass c);
std::string to_string(CurvatureClass c);

} // namespace godel
