#include "godel/causality.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "godel/errors.hpp"

namespace godel {

namespace {

double const pi = std::numbers::pi;

/// D - s H, s = +-1; G changes sign exactly where one of these does.
double
factor(GodelClassParams const& gp, double r, double s)
{
    MetricFunctions const m = metric_functions(gp, r);
    return m.d - s * m.h;
}

double
factor_derivative(GodelClassParams const& gp, double r, double s)
{
    // D' is cosh(2lr), cos(2kr) or 1; H' = 2 Omega D
    double const l2 = gp.l2;
    double dprime   = 1.0;
    if (l2 > 0.0) {
        dprime = std::cosh(2.0 * std::sqrt(l2) * r);
    } else if (l2 < 0.0) {
        dprime = std::cos(2.0 * std::sqrt(-l2) * r);
    }
    return dprime - s * 2.0 * gp.omega * metric_functions(gp, r).d;
}

/// Bisection on [lo, hi] to a tight bracket, then one Newton step.
double
polish(GodelClassParams const& gp, double lo, double hi, double s)
{
    double flo = factor(gp, lo, s);
    for (int i = 0; i < 200 && hi - lo > 1e-15 * std::max(1.0, hi); ++i) {
        double const mid  = 0.5 * (lo + hi);
        double const fmid = factor(gp, mid, s);
        if (fmid == 0.0) {
            return mid;
        }
        if ((fmid > 0.0) == (flo > 0.0)) {
            lo  = mid;
            flo = fmid;
        } else {
            hi = mid;
        }
    }
    double const r  = 0.5 * (lo + hi);
    double const dr = factor_derivative(gp, r, s);
    return dr != 0.0 ? r - factor(gp, r, s) / dr : r;
}

/// Root of D - sH known to lie near `guess`, bracketed within +-width.
double
polish_near(GodelClassParams const& gp, double guess, double width, double s)
{
    double const lo = std::max(guess - width, 0.5 * guess);
    double const hi = guess + width;
    if ((factor(gp, lo, s) > 0.0) == (factor(gp, hi, s) > 0.0)) {
        return guess;
    }
    return polish(gp, lo, hi, s);
}

} // namespace

void
GodelClassParams::validate() const
{
    if (!std::isfinite(omega) || !std::isfinite(l2) || !(omega > 0.0)) {
        throw DomainError("GodelClassParams: need Omega > 0 and finite l^2");
    }
}

MetricFunctions
metric_functions(GodelClassParams const& gp, double r)
{
    gp.validate();
    if (!(r >= 0.0)) {
        throw DomainError("metric_functions: r must be non-negative");
    }
    if (gp.l2 == 0.0) {
        return MetricFunctions{gp.omega * r * r, r};
    }
    if (gp.l2 > 0.0) {
        double const l  = std::sqrt(gp.l2);
        double const sh = std::sinh(l * r);
        return MetricFunctions{gp.omega * sh * sh / gp.l2, std::sinh(2.0 * l * r) / (2.0 * l)};
    }
    double const k  = std::sqrt(-gp.l2);
    double const sn = std::sin(k * r);
    return MetricFunctions{gp.omega * sn * sn / (k * k), std::sin(2.0 * k * r) / (2.0 * k)};
}

double
g_function(GodelClassParams const& gp, double r)
{
    MetricFunctions const m = metric_functions(gp, r);
    return (m.d - m.h) * (m.d + m.h);
}

CausalClass
causal_class_of(GodelClassParams const& gp)
{
    gp.validate();
    if (gp.l2 < 0.0) {
        return CausalClass::alternating_regions;
    }
    if (gp.l2 >= gp.omega * gp.omega) {
        return CausalClass::no_ctc;
    }
    return CausalClass::one_noncausal_region;
}

CurvatureClass
curvature_class_of(GodelClassParams const& gp)
{
    gp.validate();
    if (gp.l2 == 0.0) {
        return CurvatureClass::flat;
    }
    return gp.l2 < 0.0 ? CurvatureClass::spherical : CurvatureClass::hyperbolic;
}

CausalityReport
classify(GodelClassParams const& gp, ClassifyOptions const& opts)
{
    gp.validate();
    if (opts.samples < 2) {
        throw DomainError("classify: need at least two samples");
    }
    CausalityReport rep;
    rep.causal_class    = causal_class_of(gp);
    rep.curvature_class = curvature_class_of(gp);

    switch (rep.causal_class) {
    case CausalClass::no_ctc:
        rep.r_max = opts.r_max.value_or(3.0 / gp.omega);
        break;
    case CausalClass::one_noncausal_region: {
        // D = H: r = Omega r^2 (flat) or tanh(l r) = l / Omega
        double guess = 1.0 / gp.omega;
        if (gp.l2 > 0.0) {
            double const l = std::sqrt(gp.l2);
            guess          = std::atanh(l / gp.omega) / l;
        }
        rep.r_max = opts.r_max.value_or(3.0 * std::max(guess, 1.0 / gp.omega));
        double const rc = polish_near(gp, guess, 0.25 * guess, 1.0);
        if (rc <= rep.r_max) {
            rep.critical_radii.push_back(rc);
        }
        break;
    }
    case CausalClass::alternating_regions: {
        double const k = std::sqrt(-gp.l2);
        rep.r_max      = opts.r_max.value_or(3.0 * pi / k);
        // D - H = 0 at kr = atan(k/Omega) + j pi, D + H = 0 at kr = pi - atan(k/Omega) + j pi
        double const base = std::atan(k / gp.omega);
        double const half = 0.25 * std::min(base, pi - base) / k;
        for (int j = 0; (base + j * pi) / k <= rep.r_max + half; ++j) {
            double const r1 = polish_near(gp, (base + j * pi) / k, half, 1.0);
            double const r2 = polish_near(gp, (pi - base + j * pi) / k, half, -1.0);
            for (double r : {r1, r2}) {
                if (r > 0.0 && r <= rep.r_max) {
                    rep.critical_radii.push_back(r);
                }
            }
        }
        std::sort(rep.critical_radii.begin(), rep.critical_radii.end());
        break;
    }
    }

    rep.samples.reserve(opts.samples);
    for (int i = 0; i < opts.samples; ++i) {
        double const r          = rep.r_max * i / (opts.samples - 1);
        MetricFunctions const m = metric_functions(gp, r);
        rep.samples.push_back({r, m.h, m.d, (m.d - m.h) * (m.d + m.h)});
    }
    return rep;
}

std::string
to_string(CausalClass c)
{
    switch (c) {
    case CausalClass::no_ctc:
        return "NoCTC";
    case CausalClass::alternating_regions:
        return "AlternatingRegions";
    case CausalClass::one_noncausal_region:
        return "OneNoncausalRegion";
    }
    return "?";
}

std::string
to_string(CurvatureClass c)
{
    switch (c) {
    case CurvatureClass::flat:
        return "Flat";
    case CurvatureClass::spherical:
        return "Spherical";
    case CurvatureClass::hyperbolic:
        return "Hyperbolic";
    }
    return "?";
}

} // namespace godel
