#pragma once

/** \file geometry.hpp
 *
 *  \brief Spherical Goedel-type metric with a disclination: metric, tetrad, connection one-forms
 *         and spinor connections in coordinates (t, theta, phi).
 *
 *  The line element is
 *
 *      ds^2 = -[dt + 4 alpha Omega R^2 sin^2(theta/2) dphi]^2 + R^2 (dtheta^2 + alpha^2 sin^2(theta) dphi^2)
 *
 *  and every matrix in this header is indexed (t, theta, phi) for coordinate indices and
 *  (0, 1, 2) for frame indices, with eta = diag(-1, 1, 1). The poles theta = 0, pi are excluded.
 */

#include <array>

#include <Eigen/Dense>

namespace godel {

using Matrix3  = Eigen::Matrix3d;
using Matrix2c = Eigen::Matrix2cd;

/// Model configuration shared by every module.
struct GeometryParams
{
    /// Disclination parameter, alpha = 1 -/+ lambda/2pi (removal: 0 < alpha <= 1, insertion: alpha > 1).
    double alpha{1.0};
    /// Angular velocity of the rotating frame (natural units).
    double omega{0.0};
    /// Sphere radius.
    double radius{1.0};
    double hbar{1.0};
    /// Fermi velocity.
    double vf{1.0};

    /// Throws DomainError unless alpha > 0 and radius > 0.
    void validate() const;

    /// 1 - 8 Omega^2 > 0.
    bool rotation_regular() const
    {
        return 1.0 - 8.0 * omega * omega > 0.0;
    }
};

struct MetricSample
{
    double theta{0.0};
    double phi{0.0};
    Matrix3 g{Matrix3::Zero()};
};

/// e(a, mu) = e^a_mu, einv(mu, a) = e^mu_a.
struct Tetrad
{
    Matrix3 e{Matrix3::Identity()};
    Matrix3 einv{Matrix3::Identity()};
};

/// Connection one-forms as a full table: mixed[mu](a, b) = omega_mu^a_b.
struct ConnectionOneForms
{
    std::array<Matrix3, 3> mixed{Matrix3::Zero(), Matrix3::Zero(), Matrix3::Zero()};

    /// omega_{mu ab} = eta_{ac} omega_mu^c_b.
    Matrix3 lowered(int mu) const;
};

/// The three independent connection components of the closed form; every other component is
/// either zero or fixed by antisymmetry of omega_{ab}.
struct SpinConnection
{
    double phi_01{0.0};   ///< omega_phi^0_1
    double phi_21{0.0};   ///< omega_phi^2_1
    double theta_02{0.0}; ///< omega_theta^0_2

    ConnectionOneForms one_forms() const;
};

struct SpinorConnection
{
    Matrix2c gamma_phi{Matrix2c::Zero()};
    Matrix2c gamma_theta{Matrix2c::Zero()};
};

/// Which set of connection one-forms a structure-equation check is run against.
enum class ConnectionModel
{
    /// The closed-form components returned by spin_connection_at.
    closed_form,
    /// The unique torsion-free connection of the tetrad, solved in closed form.
    torsion_free,
};

MetricSample metric_at(GeometryParams const& p, double theta, double phi = 0.0);

Tetrad tetrad_at(GeometryParams const& p, double theta);

/// omega_phi^0_1 = 2 alpha Omega R sin(theta), omega_phi^2_1 = alpha cos(theta), omega_theta^0_2 = 2 Omega R.
SpinConnection spin_connection_at(GeometryParams const& p, double theta);

/// Torsion-free (Levi-Civita) connection of the tetrad. Differs from spin_connection_at when Omega != 0.
ConnectionOneForms torsion_free_connection_at(GeometryParams const& p, double theta);

/// Max |(d theta^a + omega^a_b ^ theta^b)_{mu nu}| with d theta^a from central differences of the
/// tetrad at theta +- h. For a connection that solves the structure equation this is O(h^2).
double maurer_cartan_residual(GeometryParams const& p, double theta, double h,
                              ConnectionModel model = ConnectionModel::closed_form);

/// Closed form: Gamma_phi = (i/2)(alpha cos(theta) s3 - 2 alpha Omega R sin(theta) s2), Gamma_theta = i Omega R s1.
SpinorConnection spinor_connection_at(GeometryParams const& p, double theta);

/// Generator Sigma^{ab} used in Gamma_mu = (i/4) omega_{mu ab} Sigma^{ab}.
///
/// Convention: Sigma^{ab} = epsilon^{abc} eta_{cc} tau_c with tau = (s3, s1, s2) and epsilon^{012} = 1,
/// i.e. Sigma^{01} = s2, Sigma^{02} = -s1, Sigma^{12} = -s3. This is the normalization under which the
/// contraction reproduces spinor_connection_at exactly.
Matrix2c sigma_generator(int a, int b);

/// (i/4) omega_{mu ab} Sigma^{ab} for mu = theta and mu = phi.
SpinorConnection contract_spinor_connection(ConnectionOneForms const& w);

/// Number of negative eigenvalues of the coordinate metric (1 for signature (-, +, +)).
int negative_directions(MetricSample const& sample);

/// Pauli matrices, index 1..3; index 0 is the identity.
Matrix2c pauli(int i);

} // namespace godel
