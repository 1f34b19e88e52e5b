#include <doctest.h>

#include <cmath>
#include <numbers>

#include "godel/errors.hpp"
#include "godel/oracle.hpp"

using namespace godel;

namespace {

double const pi = std::numbers::pi;

GeometryParams
geo(double alpha, double omega)
{
    GeometryParams p;
    p.alpha = alpha;
    p.omega = omega;
    return p;
}

/// Positive root for mt/alpha >= g/alpha and g/alpha + mt/alpha + 4 Omega lambda > 0, where the
/// system reduces to a trigonometric Poeschl-Teller problem:
/// lambda^2 - 4 Omega (N - a) lambda - (N^2 - a^2) = 0 with N = n + mu + 1/2.
double
poschl_teller(int n, double mu, double a, double omega)
{
    double const big_n = n + mu + 0.5;
    double const b     = -4.0 * omega * (big_n - a);
    double const c     = -(big_n * big_n - a * a);
    return 0.5 * (-b + std::sqrt(b * b - 4.0 * c));
}

} // namespace

TEST_CASE("reference roots agree with high-precision values")
{
    CHECK(poschl_teller(0, 2.5, 1.5, 0.1) == doctest::Approx(2.91533936612440413).epsilon(1e-14));
    CHECK(poschl_teller(1, 2.5, 1.5, 0.1) == doctest::Approx(4.24165738677394139).epsilon(1e-14));
    CHECK(poschl_teller(0, 0.5, 0.0, 0.1) == doctest::Approx(1.21980390271855697).epsilon(1e-14));
}

TEST_CASE("right-hand side is the written first-order system")
{
    QuantumNumbers const q{0, 1.5};
    GeometryParams const p = geo(0.9, 0.07);
    FluxConfig const f{0.4};
    MonopoleConfig const c = monopole_charge(4);
    double const th = 1.1, lambda = 1.7;
    double const g = c.charge(), mt = q.m - f.phi_frac();
    DiracState const psi{std::complex<double>(0.3, -0.2), std::complex<double>(-1.1, 0.5)};
    DiracState const d = rhs_first_order(th, psi, lambda, q, p, f, c);
    std::complex<double> const i(0, 1);
    for (int k : {1, -1}) {
        int const idx    = k == 1 ? 0 : 1;
        double const orb = (k / (p.alpha * std::sin(th))) *
                           (mt + 4 * p.alpha * p.omega * lambda * std::pow(std::sin(th / 2), 2));
        double const w   = (0.5 + k * g / p.alpha) / std::tan(th) - orb;
        std::complex<double> const want = -w * psi[idx] + i * lambda * psi[1 - idx];
        CHECK(std::abs(d[idx] - want) < 1e-14);
    }
}

TEST_CASE("right-hand side is linear and rejects the poles")
{
    QuantumNumbers const q{0, 0.5};
    GeometryParams const p = geo(1.0, 0.1);
    DiracState const a{1.0, std::complex<double>(0, 2)};
    DiracState const b{std::complex<double>(0.5, 1), -0.25};
    DiracState const s{2.0 * a[0] + b[0], 2.0 * a[1] + b[1]};
    DiracState const da = rhs_first_order(0.8, a, 1.3, q, p, {}, {});
    DiracState const db = rhs_first_order(0.8, b, 1.3, q, p, {}, {});
    DiracState const ds = rhs_first_order(0.8, s, 1.3, q, p, {}, {});
    for (int j = 0; j < 2; ++j) {
        CHECK(std::abs(ds[j] - (2.0 * da[j] + db[j])) < 1e-13);
    }
    CHECK_THROWS_AS(rhs_first_order(0.0, a, 1.3, q, p, {}, {}), DomainError);
    CHECK_THROWS_AS(rhs_first_order(pi, a, 1.3, q, p, {}, {}), DomainError);
}

TEST_CASE("shooting configuration is validated")
{
    ShootingConfig c;
    CHECK_NOTHROW(c.validate());
    c.match_angle = 0.0;
    CHECK_THROWS_AS(c.validate(), DomainError);
    c             = {};
    c.rel_tol     = 0.0;
    CHECK_THROWS_AS(c.validate(), DomainError);
    c             = {};
    c.theta_max   = pi;
    CHECK_THROWS_AS(c.validate(), DomainError);
}

TEST_CASE("uncharged inertial sphere gives n + |m| + 1/2 with n nodes")
{
    for (int n = 0; n <= 2; ++n) {
        for (double m : {-1.5, 0.5, 2.5}) {
            QuantumNumbers const q{n, m};
            OracleEigenvalue const up = shoot_eigenvalue(q, geo(1.0, 0.0), {}, {}, {}, Branch::plus);
            CHECK(up.lambda == doctest::Approx(n + std::abs(m) + 0.5).epsilon(1e-9));
            CHECK(up.node_count == n);
            CHECK(up.match_residual < 1e-8);
            OracleEigenvalue const dn = shoot_eigenvalue(q, geo(1.0, 0.0), {}, {}, {}, Branch::minus);
            CHECK(dn.lambda == doctest::Approx(-(n + std::abs(m) + 0.5)).epsilon(1e-9));
        }
    }
}

TEST_CASE("rotating sphere reproduces the reduced problem")
{
    MonopoleConfig const c = monopole_charge(12);
    for (int n = 0; n <= 1; ++n) {
        OracleEigenvalue const o = shoot_eigenvalue({n, 2.5}, geo(1.0, 0.1), {}, c);
        CHECK(o.lambda == doctest::Approx(poschl_teller(n, 2.5, 1.5, 0.1)).epsilon(1e-9));
        CHECK(o.node_count == n);
    }
    OracleEigenvalue const free = shoot_eigenvalue({0, 0.5}, geo(1.0, 0.1), {}, {});
    CHECK(free.lambda == doctest::Approx(poschl_teller(0, 0.5, 0.0, 0.1)).epsilon(1e-9));
}

TEST_CASE("rotating eigenvalue is not a root of the quantization polynomial")
{
    // The reduced problem and Q share the Omega = 0 limit but not the Omega-linear term.
    MonopoleConfig const c = monopole_charge(12);
    double const shot      = shoot_eigenvalue({0, 2.5}, geo(1.0, 0.1), {}, c).lambda;
    double const formula   = solve_spectrum({0, 2.5}, geo(1.0, 0.1), {}, c).lambda_plus.real();
    CHECK(std::abs(shot - formula) > 0.1);
}

TEST_CASE("inertial defected sphere agrees with the closed form when |mt| >= g")
{
    MonopoleConfig const c = monopole_charge(12);
    for (int n = 0; n <= 2; ++n) {
        for (double m : {1.5, 2.5, -2.5}) {
            QuantumNumbers const q{n, m};
            double const want = solve_spectrum(q, geo(1.0, 0.0), {}, c).lambda_plus.real();
            CHECK(shoot_eigenvalue(q, geo(1.0, 0.0), {}, c).lambda == doctest::Approx(want).epsilon(1e-9));
        }
    }
}

TEST_CASE("tie |mt| = g follows the psi+ led solution")
{
    // mt = g = 3/2: both Frobenius exponents coincide at the north pole
    MonopoleConfig const c = monopole_charge(12);
    for (int n = 0; n <= 1; ++n) {
        OracleEigenvalue const o = shoot_eigenvalue({n, 1.5}, geo(1.0, 0.0), {}, c);
        CHECK(o.lambda == doctest::Approx(std::sqrt((n + 2.0) * (n + 2.0) - 2.25)).epsilon(1e-9));
    }
}

TEST_CASE("inertial defected sphere below |mt| = g departs from the closed form")
{
    // the regular solution at this pole is chi-led, giving lambda^2 = (n + g + 1)^2 - g^2
    MonopoleConfig const c = monopole_charge(12);
    CHECK_FALSE(solve_spectrum({0, 0.5}, geo(1.0, 0.0), {}, c).valid);
    for (int n = 0; n <= 2; ++n) {
        QuantumNumbers const q{n, 0.5};
        double const want        = std::sqrt((n + 2.5) * (n + 2.5) - 2.25);
        OracleEigenvalue const o = shoot_eigenvalue(q, geo(1.0, 0.0), {}, c);
        CHECK(o.lambda == doctest::Approx(want).epsilon(1e-9));
        CHECK(o.node_count == n);
        SpectrumResult const s = solve_spectrum(q, geo(1.0, 0.0), {}, c);
        if (s.valid) {
            CHECK(std::abs(s.lambda_plus.real() - o.lambda) > 0.5);
        }
    }
}

TEST_CASE("eigenvalue is stable under cutoff and tolerance changes")
{
    QuantumNumbers const q{1, 2.5};
    GeometryParams const p = geo(0.9, 0.05);
    MonopoleConfig const c = monopole_charge(12);
    double const base      = shoot_eigenvalue(q, p, {}, c).lambda;

    ShootingConfig wide;
    wide.theta_min = 1e-4;
    wide.theta_max = pi - 1e-4;
    CHECK(std::abs(shoot_eigenvalue(q, p, {}, c, wide).lambda - base) < 1e-8);

    ShootingConfig tight;
    tight.rel_tol = 1e-12;
    tight.abs_tol = 1e-14;
    CHECK(std::abs(shoot_eigenvalue(q, p, {}, c, tight).lambda - base) < 1e-8);

    ShootingConfig moved;
    moved.match_angle = 1.2;
    CHECK(std::abs(shoot_eigenvalue(q, p, {}, c, moved).lambda - base) < 1e-8);
}

TEST_CASE("explicit bracket is honoured")
{
    ShootingConfig cfg;
    cfg.bracket = std::pair{1.5, 2.5};
    CHECK(shoot_eigenvalue({1, 0.5}, geo(1.0, 0.0), {}, {}, cfg).lambda == doctest::Approx(2.0).epsilon(1e-10));
    cfg.bracket = std::pair{2.2, 2.8};
    CHECK_THROWS_AS(shoot_eigenvalue({1, 0.5}, geo(1.0, 0.0), {}, {}, cfg), NoBracket);
}

TEST_CASE("scan finds the whole inertial ladder")
{
    ShootingConfig const cfg;
    auto const roots = scan_eigenvalues({0, 0.5}, geo(1.0, 0.0), {}, {}, cfg, 0.2, 3.7);
    REQUIRE(roots.size() == 3);
    for (std::size_t j = 0; j < roots.size(); ++j) {
        CHECK(roots[j].lambda == doctest::Approx(j + 1.0).epsilon(1e-9));
        CHECK(roots[j].node_count == static_cast<int>(j));
    }
    CHECK(scan_limit({0, 0.5}, geo(1.0, 0.0), {}, {}) >= 3.5);
}

TEST_CASE("matching determinant is normalized and vanishes at an eigenvalue")
{
    QuantumNumbers const q{0, 0.5};
    CHECK(std::abs(matching_determinant(1.0, q, geo(1.0, 0.0), {}, {})) < 1e-9);
    double const off = matching_determinant(1.4, q, geo(1.0, 0.0), {}, {});
    CHECK(std::abs(off) > 1e-3);
    CHECK(std::abs(off) <= 1.0);
}

TEST_CASE("indicial exponents match the local power law of the solution")
{
    QuantumNumbers const q{0, 2.5};
    GeometryParams const p = geo(1.0, 0.0);
    MonopoleConfig const c = monopole_charge(12);
    double const lambda    = shoot_eigenvalue(q, p, {}, c).lambda;
    PoleExponents const e  = indicial_exponents(q, p, {}, c, lambda);
    CHECK(e.north == doctest::Approx(0.5));

    ShootingSolution const sol(q, p, {}, c, lambda);
    double const t1 = 1e-3, t2 = 2e-3;
    double const north = std::log(std::abs(sol.at(t2)[0]) / std::abs(sol.at(t1)[0])) / std::log(2.0);
    CHECK(north == doctest::Approx(e.north).epsilon(1e-2));
    double const south =
        std::log(std::abs(sol.at(pi - t2)[0]) / std::abs(sol.at(pi - t1)[0])) / std::log(2.0);
    CHECK(south == doctest::Approx(e.south).epsilon(1e-2));
}

TEST_CASE("glued solution is continuous at the matching angle")
{
    QuantumNumbers const q{1, 1.5};
    MonopoleConfig const c = monopole_charge(4);
    GeometryParams const p = geo(1.0, 0.0);
    double const lambda    = shoot_eigenvalue(q, p, {}, c).lambda;
    ShootingSolution const sol(q, p, {}, c, lambda);
    DiracState const l = sol.at(pi / 2 - 1e-9);
    DiracState const r = sol.at(pi / 2 + 1e-9);
    CHECK(std::abs(l[0] - r[0]) < 1e-6 * std::abs(l[0]));
    CHECK(std::abs(l[1] - r[1]) < 1e-6 * (std::abs(l[0]) + std::abs(l[1])));
}

TEST_CASE("second-order residual separates eigenvalues from other values")
{
    QuantumNumbers const q{0, 2.5};
    GeometryParams const p = geo(1.0, 0.0);
    MonopoleConfig const c = monopole_charge(12);
    ShootingConfig tight;
    tight.rel_tol       = 1e-13;
    tight.abs_tol       = 1e-15;
    double const lambda = shoot_eigenvalue(q, p, {}, c, tight).lambda;
    CHECK(eigenfunction_residual(q, p, {}, c, lambda, tight) < 1e-6);
    CHECK(eigenfunction_residual(q, p, {}, c, lambda + 0.3, tight) > 1.0);
}
