#include "godel/gauge.hpp"

#include <cmath>
#include <complex>
#include <string>

#include "godel/errors.hpp"

namespace godel {

MonopoleConfig
monopole_charge(std::int64_t defects)
{
    if (defects < 0) {
        throw DomainError("monopole_charge: defect count must be non-negative, got " + std::to_string(defects));
    }
    return MonopoleConfig{defects};
}

double
monopole_potential(MonopoleConfig const& c, KPoint k, double theta)
{
    if (!(theta > 0.0 && theta < std::numbers::pi)) {
        throw DomainError("monopole_potential: theta outside (0, pi)");
    }
    return sign_of(k) * c.charge() * std::cos(theta);
}

double
ab_potential(FluxConfig const& f)
{
    return f.phi_frac();
}

Matrix2c
tau2()
{
    return pauli(2);
}

Matrix2c
diagonalizing_rotation()
{
    using c = std::complex<double>;
    Matrix2c u;
    u << 1, 1, c(0, 1), c(0, -1);
    return u / std::sqrt(2.0);
}

} // namespace godel
