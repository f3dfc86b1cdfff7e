#ifndef SCHUR_TYPES_HPP
#define SCHUR_TYPES_HPP

#include <complex>
#include <stdexcept>
#include <string>

namespace schur {

using Complex = std::complex<double>;

inline bool is_finite(Complex z) {
    return std::isfinite(z.real()) && std::isfinite(z.imag());
}

// Denominators below this modulus are treated as exact zeros.
inline constexpr double kDenominatorFloor = 1e-300;

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A documented precondition was violated by the caller.
class ContractViolation : public Error {
public:
    using Error::Error;
};

class DegenerateDenominator : public Error {
public:
    using Error::Error;
};

class QuadratureNonConvergence : public Error {
public:
    using Error::Error;
};

class GeometryDegenerate : public Error {
public:
    using Error::Error;
};

class BranchCutHit : public Error {
public:
    using Error::Error;
};

struct ToleranceConfig {
    double cls_tol = 1e-12;   // band around |gamma| = 1
    double quad_tol = 1e-10;  // absolute quadrature error target
    double geom_tol = 1e-6;   // hull containment slack

    // Throws ContractViolation unless 0 <= cls_tol < 1 and the others are positive.
    void validate() const;
};

}  // namespace schur

#endif  // SCHUR_TYPES_HPP
