#pragma once

#include <stdexcept>
#include <string>

namespace godel {

/// Argument outside the domain of an operation (pole angles, negative defect counts, ...).
class DomainError : public std::domain_error
{
  public:
    using std::domain_error::domain_error;
};

/// 1 - 8 Omega^2 == 0: the quantization polynomial degenerates to a linear equation.
class RotationSingular : public std::runtime_error
{
  public:
    using std::runtime_error::runtime_error;
};

/// The matching determinant does not change sign on the requested interval.
class NoBracket : public std::runtime_error
{
  public:
    using std::runtime_error::runtime_error;
};

/// Adaptive step control collapsed (usually right next to a pole).
class StiffFailure : public std::runtime_error
{
  public:
    using std::runtime_error::runtime_error;
};

/// Malformed run configuration or command line.
class ConfigError : public std::runtime_error
{
  public:
    using std::runtime_error::runtime_error;
};

} // namespace godel
