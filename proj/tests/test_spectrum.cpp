#include <doctest.h>

#include <cmath>
#include <numbers>

#include "godel/errors.hpp"
#include "godel/spectrum.hpp"

using namespace godel;

namespace {

double const pi = std::numbers::pi;

GeometryParams
geo(double alpha, double omega, double radius = 1.0)
{
    GeometryParams p;
    p.alpha  = alpha;
    p.omega  = omega;
    p.radius = radius;
    return p;
}

QuantumNumbers
qn(int n, double m)
{
    return QuantumNumbers{n, m};
}

} // namespace

TEST_CASE("quantum numbers are validated")
{
    CHECK_NOTHROW(qn(0, 0.5).validate());
    CHECK_NOTHROW(qn(2, -1.0).validate());
    CHECK_THROWS_AS(qn(-1, 0.5).validate(), DomainError);
    CHECK_THROWS_AS(qn(0, 0.3).validate(), DomainError);
    CHECK_THROWS_AS(qn(0, 0.5).validate(MLattice::integer), DomainError);
    CHECK_THROWS_AS(qn(0, 1.0).validate(MLattice::half_integer), DomainError);
    CHECK_NOTHROW(qn(0, -2.0).validate(MLattice::integer));
}

TEST_CASE("reduced angular quantities")
{
    ReducedAngular const r =
        reduced_angular({2, -1.5}, geo(0.8, 0.05), FluxConfig{0.6 * pi}, monopole_charge(12));
    CHECK(r.mtilde == doctest::Approx(-1.8));
    CHECK(r.a == doctest::Approx(2 + 1.8 / 0.8 + 0.5));
    CHECK(r.b == doctest::Approx((-1.8 + 1.5) / 0.8 + 0.5));
}

TEST_CASE("ansatz exponents")
{
    AnsatzExponents const e = ansatz_exponents({0, 2.5}, geo(1.0, 0.1), FluxConfig{}, monopole_charge(12));
    CHECK(e.c_plus == doctest::Approx(0.5 * std::abs(2.5 + 2.0 - 0.05 * 4.0)));
    CHECK(e.c_minus == doctest::Approx(0.5 * std::abs(2.5 - 2.0 + 0.05 * 4.0)));
}

TEST_CASE("roots of the quantization polynomial match high-precision values")
{
    SpectrumResult const s = solve_spectrum({1, 2.5}, geo(1.0, 0.1), FluxConfig{}, monopole_charge(12));
    CHECK(s.valid);
    CHECK(s.lambda_plus.real() == doctest::Approx(4.96607311474872637).epsilon(1e-14));
    CHECK(s.lambda_minus.real() == doctest::Approx(-3.00955137561829159).epsilon(1e-14));
    CHECK(s.residual_plus < 1e-12);
    CHECK(s.residual_minus < 1e-12);

    SpectrumResult const t = solve_spectrum({2, -1.5}, geo(0.8, 0.05), FluxConfig{0.6 * pi}, monopole_charge(12));
    CHECK(t.lambda_plus.real() == doctest::Approx(4.42135458796851275).epsilon(1e-14));
    CHECK(t.lambda_minus.real() == doctest::Approx(-4.39584438388688010).epsilon(1e-14));
}

TEST_CASE("energies scale with hbar vF / R")
{
    GeometryParams p = geo(1.0, 0.1, 2.0);
    p.hbar           = 0.5;
    p.vf             = 3.0;
    SpectrumResult const s = solve_spectrum({1, 2.5}, p, FluxConfig{}, monopole_charge(12));
    CHECK(s.eps_plus.real() == doctest::Approx(0.75 * s.lambda_plus.real()));
    CHECK(s.lambda_plus.real() == doctest::Approx(4.96607311474872637));
}

TEST_CASE("inertial sphere without defects")
{
    for (int n = 0; n <= 3; ++n) {
        for (double m : {-2.5, -0.5, 0.5, 1.5}) {
            SpectrumResult const s = solve_spectrum({n, m}, geo(1.0, 0.0), FluxConfig{}, MonopoleConfig{});
            CHECK(s.lambda_plus.real() == doctest::Approx(n + std::abs(m) + 0.5));
            CHECK(s.lambda_minus.real() == doctest::Approx(-(n + std::abs(m) + 0.5)));
        }
    }
}

TEST_CASE("inertial spectrum with defects is +-sqrt(A^2 - g^2/alpha^2)")
{
    SpectrumResult const s = solve_spectrum({1, 0.5}, geo(1.2, 0.0), FluxConfig{}, monopole_charge(12));
    double const a         = 1 + 0.5 / 1.2 + 0.5;
    double const g         = 1.5 / 1.2;
    CHECK(s.lambda_plus.real() == doctest::Approx(std::sqrt(a * a - g * g)));
    CHECK(s.lambda_minus.real() == doctest::Approx(-std::sqrt(a * a - g * g)));
}

TEST_CASE("complex spectrum is reported, not hidden")
{
    SpectrumResult const s = solve_spectrum({0, 0.5}, geo(1.0, 0.0), FluxConfig{}, monopole_charge(12));
    CHECK_FALSE(s.valid);
    CHECK(s.complex_spectrum());
    CHECK(s.lambda_plus.imag() != 0.0);
    CHECK(std::abs(quantization_residual(s.lambda_plus, {0, 0.5}, geo(1.0, 0.0), FluxConfig{}, monopole_charge(12)))
          < 1e-12);
}

TEST_CASE("quantization residual is independent of the K point")
{
    GeometryParams const p = geo(0.9, 0.07);
    double const r1        = quantization_residual(1.3, {1, 1.5, KPoint::plus}, p, FluxConfig{0.4}, monopole_charge(4));
    double const r2 = quantization_residual(1.3, {1, 1.5, KPoint::minus}, p, FluxConfig{0.4}, monopole_charge(4));
    CHECK(r1 == r2);
}

TEST_CASE("printed closed form agrees only without rotation")
{
    QuantumNumbers const q{1, 2.5};
    MonopoleConfig const c = monopole_charge(12);
    SpectrumResult const still = printed_spectrum(q, geo(1.0, 0.0), FluxConfig{}, c);
    SpectrumResult const ref   = solve_spectrum(q, geo(1.0, 0.0), FluxConfig{}, c);
    CHECK(still.lambda_plus.real() == doctest::Approx(ref.lambda_plus.real()).epsilon(1e-14));

    SpectrumResult const spun = printed_spectrum(q, geo(1.0, 0.1), FluxConfig{}, c);
    CHECK(spun.lambda_plus.real() == doctest::Approx(4.90561994894340574).epsilon(1e-14));
    CHECK(spun.lambda_minus.real() == doctest::Approx(-2.94909820981297096).epsilon(1e-14));
    CHECK(std::abs(quantization_residual(spun.lambda_plus.real(), q, geo(1.0, 0.1), FluxConfig{}, c)) > 1e-2);
}

TEST_CASE("slow rotation expansion is first order in Omega")
{
    QuantumNumbers const q{1, 1.5};
    MonopoleConfig const c = monopole_charge(4);
    double prev            = 0.0;
    for (double w : {4e-3, 2e-3, 1e-3}) {
        double const exact = solve_spectrum(q, geo(1.0, w), FluxConfig{}, c).lambda_plus.real();
        double const slow  = slow_rotation_spectrum(q, geo(1.0, w), FluxConfig{}, c).lambda_plus.real();
        double const err   = std::abs(exact - slow);
        if (prev > 0.0) {
            CHECK(std::log2(prev / err) == doctest::Approx(2.0).epsilon(0.02));
        }
        prev = err;
    }
}

TEST_CASE("flux derivative matches a central difference of the roots")
{
    QuantumNumbers const q{1, 1.5};
    GeometryParams const p = geo(0.9, 0.05);
    MonopoleConfig const c = monopole_charge(12);
    double const flux      = 0.7;
    double const h         = 1e-6;
    FluxDerivative const d = spectrum_flux_derivative(q, p, FluxConfig{flux}, c);
    CHECK_FALSE(d.cusp);
    for (Branch b : {Branch::plus, Branch::minus}) {
        double const up = solve_spectrum(q, p, FluxConfig{flux + h}, c).eps(b).real();
        double const dn = solve_spectrum(q, p, FluxConfig{flux - h}, c).eps(b).real();
        CHECK(d.branch(b).left == doctest::Approx((up - dn) / (2 * h)).epsilon(1e-7));
        CHECK(d.branch(b).left == d.branch(b).right);
    }
}

TEST_CASE("flux derivative has one-sided values on the cusp")
{
    QuantumNumbers const q{0, 0.5};
    GeometryParams const p = geo(1.0, 0.0);
    FluxDerivative const d = spectrum_flux_derivative(q, p, FluxConfig{pi}, MonopoleConfig{});
    CHECK(d.cusp);
    // lambda = n + |mt| + 1/2, so d eps / d Phi = -+ 1/2pi on either side of mt = 0
    CHECK(d.plus.left == doctest::Approx(-1 / (2 * pi)));
    CHECK(d.plus.right == doctest::Approx(1 / (2 * pi)));
    CHECK(d.plus.mean() == doctest::Approx(0.0));
}

TEST_CASE("flux derivative refuses a complex spectrum")
{
    CHECK_THROWS_AS(spectrum_flux_derivative({0, 0.5}, geo(1.0, 0.0), FluxConfig{}, monopole_charge(12)),
                    DomainError);
}

TEST_CASE("critical rotation is singular")
{
    GeometryParams const p = geo(1.0, 1.0 / std::sqrt(8.0));
    CHECK_THROWS_AS(solve_spectrum({0, 0.5}, p, FluxConfig{}, MonopoleConfig{}), RotationSingular);
    SpectrumResult const beyond = solve_spectrum({0, 0.5}, geo(1.0, 0.4), FluxConfig{}, MonopoleConfig{});
    CHECK_FALSE(beyond.rotation_regular);
    CHECK_FALSE(beyond.valid);
}

TEST_CASE("names")
{
    CHECK(to_string(Branch::plus) == "plus");
    CHECK(to_string(Branch::minus) == "minus");
    CHECK(to_string(MLattice::half_integer) == "half_integer");
    CHECK(to_string(MLattice::integer) == "integer");
}
