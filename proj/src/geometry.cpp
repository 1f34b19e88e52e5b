#include "godel/geometry.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <sstream>

#include "godel/errors.hpp"

namespace godel {

namespace {

constexpr int t_idx     = 0;
constexpr int theta_idx = 1;
constexpr int phi_idx   = 2;

Matrix3 const eta = Eigen::Vector3d(-1.0, 1.0, 1.0).asDiagonal();

void
require_open_angle(double theta, char const* op)
{
    if (!(theta > 0.0 && theta < std::numbers::pi)) {
        std::ostringstream s;
        s << op << ": theta = " << theta << " outside (0, pi)";
        throw DomainError(s.str());
    }
}

/// Coefficient of dphi in theta^0.
double
frame_dragging(GeometryParams const& p, double theta)
{
    double const s = std::sin(0.5 * theta);
    return 4.0 * p.alpha * p.omega * p.radius * p.radius * s * s;
}

Matrix3
raise_first(Matrix3 const& lowered)
{
    return eta * lowered; // eta^{-1} == eta
}

} // namespace

void
GeometryParams::validate() const
{
    if (!(alpha > 0.0)) {
        throw DomainError("alpha must be positive");
    }
    if (!(radius > 0.0)) {
        throw DomainError("radius must be positive");
    }
    if (!(hbar > 0.0) || !(vf > 0.0)) {
        throw DomainError("hbar and vf must be positive");
    }
}

Matrix3
ConnectionOneForms::lowered(int mu) const
{
    return eta * mixed.at(mu);
}

ConnectionOneForms
SpinConnection::one_forms() const
{
    // lowered omega_{ab} is antisymmetric; the stated components fix omega_{01}, omega_{21}, omega_{02}
    Matrix3 w_theta = Matrix3::Zero();
    Matrix3 w_phi   = Matrix3::Zero();

    w_phi(0, 1) = -phi_01;
    w_phi(1, 0) = phi_01;
    w_phi(2, 1) = phi_21;
    w_phi(1, 2) = -phi_21;

    w_theta(0, 2) = -theta_02;
    w_theta(2, 0) = theta_02;

    ConnectionOneForms out;
    out.mixed[theta_idx] = raise_first(w_theta);
    out.mixed[phi_idx]   = raise_first(w_phi);
    return out;
}

MetricSample
metric_at(GeometryParams const& p, double theta, double phi)
{
    p.validate();
    require_open_angle(theta, "metric_at");

    double const f  = frame_dragging(p, theta);
    double const st = std::sin(theta);
    double const r2 = p.radius * p.radius;

    MetricSample out;
    out.theta                 = theta;
    out.phi                   = phi;
    out.g(t_idx, t_idx)       = -1.0;
    out.g(t_idx, phi_idx)     = -f;
    out.g(phi_idx, t_idx)     = -f;
    out.g(theta_idx, theta_idx) = r2;
    out.g(phi_idx, phi_idx)   = p.alpha * p.alpha * r2 * st * st - f * f;
    return out;
}

Tetrad
tetrad_at(GeometryParams const& p, double theta)
{
    p.validate();
    require_open_angle(theta, "tetrad_at");

    double const f = frame_dragging(p, theta);
    double const d = p.alpha * p.radius * std::sin(theta);
    if (d == 0.0) {
        throw DomainError("tetrad_at: singular tetrad (sin(theta) == 0)");
    }

    Tetrad out;
    out.e                      = Matrix3::Zero();
    out.e(0, t_idx)            = 1.0;
    out.e(0, phi_idx)          = f;
    out.e(1, theta_idx)        = p.radius;
    out.e(2, phi_idx)          = d;

    out.einv                   = Matrix3::Zero();
    out.einv(t_idx, 0)         = 1.0;
    out.einv(theta_idx, 1)     = 1.0 / p.radius;
    out.einv(phi_idx, 2)       = 1.0 / d;
    out.einv(t_idx, 2)         = -f / d;

    double const err = std::max((out.e * out.einv - Matrix3::Identity()).cwiseAbs().maxCoeff(),
                                (out.einv * out.e - Matrix3::Identity()).cwiseAbs().maxCoeff());
    if (err > 1e-12) {
        throw DomainError("tetrad_at: inverse tetrad check failed near a pole");
    }
    return out;
}

SpinConnection
spin_connection_at(GeometryParams const& p, double theta)
{
    p.validate();
    require_open_angle(theta, "spin_connection_at");

    SpinConnection out;
    out.phi_01   = 2.0 * p.alpha * p.omega * p.radius * std::sin(theta);
    out.phi_21   = p.alpha * std::cos(theta);
    out.theta_02 = 2.0 * p.omega * p.radius;
    return out;
}

ConnectionOneForms
torsion_free_connection_at(GeometryParams const& p, double theta)
{
    p.validate();
    require_open_angle(theta, "torsion_free_connection_at");

    // d theta^0 = 2 Omega theta^1 ^ theta^2 and d theta^2 = (cot(theta)/R) theta^1 ^ theta^2 give
    // omega_01 = -Omega theta^2, omega_02 = Omega theta^1, omega_12 = Omega theta^0 - (cot(theta)/R) theta^2.
    double const f  = frame_dragging(p, theta);
    double const st = std::sin(theta);
    double const ct = std::cos(theta);

    std::array<Matrix3, 3> low{Matrix3::Zero(), Matrix3::Zero(), Matrix3::Zero()};
    auto set = [&](int mu, int a, int b, double v) {
        low[mu](a, b) = v;
        low[mu](b, a) = -v;
    };
    set(phi_idx, 0, 1, -p.omega * p.alpha * p.radius * st);
    set(theta_idx, 0, 2, p.omega * p.radius);
    set(t_idx, 1, 2, p.omega);
    set(phi_idx, 1, 2, p.omega * f - p.alpha * ct);

    ConnectionOneForms out;
    for (int mu = 0; mu < 3; ++mu) {
        out.mixed[mu] = raise_first(low[mu]);
    }
    return out;
}

double
maurer_cartan_residual(GeometryParams const& p, double theta, double h, ConnectionModel model)
{
    p.validate();
    if (!(h > 0.0) || h > 1e-2) {
        throw DomainError("maurer_cartan_residual: step must lie in (0, 1e-2]");
    }
    require_open_angle(theta - h, "maurer_cartan_residual");
    require_open_angle(theta + h, "maurer_cartan_residual");

    Matrix3 const e  = tetrad_at(p, theta).e;
    Matrix3 const de = (tetrad_at(p, theta + h).e - tetrad_at(p, theta - h).e) / (2.0 * h);

    ConnectionOneForms const w = model == ConnectionModel::closed_form
                                     ? spin_connection_at(p, theta).one_forms()
                                     : torsion_free_connection_at(p, theta);

    double worst = 0.0;
    for (int a = 0; a < 3; ++a) {
        for (int mu = 0; mu < 3; ++mu) {
            for (int nu = mu + 1; nu < 3; ++nu) {
                // only theta-derivatives survive
                double d_form = 0.0;
                if (mu == theta_idx) {
                    d_form += de(a, nu);
                }
                if (nu == theta_idx) {
                    d_form -= de(a, mu);
                }
                double wedge = 0.0;
                for (int b = 0; b < 3; ++b) {
                    wedge += w.mixed[mu](a, b) * e(b, nu) - w.mixed[nu](a, b) * e(b, mu);
                }
                worst = std::max(worst, std::abs(d_form + wedge));
            }
        }
    }
    return worst;
}

Matrix2c
pauli(int i)
{
    using c = std::complex<double>;
    Matrix2c m;
    switch (i) {
        case 0:
            m << 1, 0, 0, 1;
            break;
        case 1:
            m << 0, 1, 1, 0;
            break;
        case 2:
            m << 0, c(0, -1), c(0, 1), 0;
            break;
        case 3:
            m << 1, 0, 0, -1;
            break;
        default:
            throw DomainError("pauli: index must be 0..3");
    }
    return m;
}

Matrix2c
sigma_generator(int a, int b)
{
    if (a < 0 || a > 2 || b < 0 || b > 2) {
        throw DomainError("sigma_generator: frame indices must be 0..2");
    }
    if (a == b) {
        return Matrix2c::Zero();
    }
    int const c          = 3 - a - b;
    int const tau[3]     = {3, 1, 2};
    double const eta_cc  = c == 0 ? -1.0 : 1.0;
    // Levi-Civita sign of (a, b, c) with epsilon^{012} = 1
    double const eps     = ((b - a + 3) % 3 == 1) ? 1.0 : -1.0;
    return eps * eta_cc * pauli(tau[c]);
}

SpinorConnection
contract_spinor_connection(ConnectionOneForms const& w)
{
    std::complex<double> const quarter_i(0.0, 0.25);
    auto contract = [&](int mu) {
        Matrix3 const low = w.lowered(mu);
        Matrix2c g        = Matrix2c::Zero();
        for (int a = 0; a < 3; ++a) {
            for (int b = 0; b < 3; ++b) {
                if (a != b) {
                    g += low(a, b) * sigma_generator(a, b);
                }
            }
        }
        return Matrix2c(quarter_i * g);
    };
    SpinorConnection out;
    out.gamma_theta = contract(theta_idx);
    out.gamma_phi   = contract(phi_idx);
    return out;
}

SpinorConnection
spinor_connection_at(GeometryParams const& p, double theta)
{
    p.validate();
    require_open_angle(theta, "spinor_connection_at");

    std::complex<double> const i(0.0, 1.0);
    SpinorConnection out;
    out.gamma_phi = 0.5 * i *
                    (p.alpha * std::cos(theta) * pauli(3) -
                     2.0 * p.alpha * p.omega * p.radius * std::sin(theta) * pauli(2));
    out.gamma_theta = i * p.omega * p.radius * pauli(1);
    return out;
}

int
negative_directions(MetricSample const& sample)
{
    Eigen::SelfAdjointEigenSolver<Matrix3> solver(sample.g, Eigen::EigenvaluesOnly);
    int n = 0;
    for (int i = 0; i < 3; ++i) {
        if (solver.eigenvalues()(i) < 0.0) {
            ++n;
        }
    }
    return n;
}

} // namespace godel
