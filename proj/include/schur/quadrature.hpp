#ifndef SCHUR_QUADRATURE_HPP
#define SCHUR_QUADRATURE_HPP

#include <functional>

#include "schur/types.hpp"

namespace schur {

struct QuadratureOptions {
    double abs_tol = 1e-10;
    int max_depth = 20;  // bisection levels
};

// Integral of f along the straight segment from a to b, by adaptive
// composite 15-point Gauss-Legendre with bisection.  The rule never samples
// the endpoints.  Throws QuadratureNonConvergence when a panel still fails
// the tolerance at max_depth.
Complex integrate_segment(const std::function<Complex(Complex)>& f, Complex a, Complex b,
                          const QuadratureOptions& opts = {});

}  // namespace schur

#endif  // SCHUR_QUADRATURE_HPP
