#pragma once

#include <stdexcept>
#include <string>

namespace forktx {

/// Invalid physical parameter (nonpositive wavenumber, negative gap, ...).
class DomainError : public std::invalid_argument {
public:
    explicit DomainError(const std::string& what) : std::invalid_argument(what) {}
};

/// Malformed run configuration; the message names the offending key.
class ConfigError : public std::invalid_argument {
public:
    explicit ConfigError(const std::string& what) : std::invalid_argument(what) {}
};

/// The multiple-conversion loop hit an isolated bound-state energy where
/// I - M is singular. Callers are expected to retry at a slightly
/// perturbed energy.
class SingularLoop : public std::runtime_error {
public:
    SingularLoop(double energy, double det_magnitude)
        : std::runtime_error("singular conversion loop at energy " + std::to_string(energy)),
          energy_(energy),
          det_magnitude_(det_magnitude) {}

    double energy() const noexcept { return energy_; }
    double det_magnitude() const noexcept { return det_magnitude_; }

private:
    double energy_;
    double det_magnitude_;
};

namespace numerics {

class DimensionMismatch : public std::invalid_argument {
public:
    explicit DimensionMismatch(const std::string& what) : std::invalid_argument(what) {}
};

/// Matrix is singular within tolerance; carries |det| for diagnostics.
class SingularMatrix : public std::runtime_error {
public:
    SingularMatrix(const std::string& what, double det_magnitude)
        : std::runtime_error(what), det_magnitude_(det_magnitude) {}

    double det_magnitude() const noexcept { return det_magnitude_; }

private:
    double det_magnitude_;
};

}  // namespace numerics
}  // namespace forktx
