#include "schur/quadrature.hpp"

#include <cmath>
#include <string>

#include <boost/math/quadrature/gauss.hpp>

namespace schur {

namespace {

using Rule = boost::math::quadrature::gauss<double, 15>;

// Gauss-Legendre on the parameter interval [t0, t1] of a + t (b - a).
Complex panel(const std::function<Complex(Complex)>& f, Complex a, Complex delta, double t0,
              double t1) {
    const auto& x = Rule::abscissa();
    const auto& w = Rule::weights();
    const double half = 0.5 * (t1 - t0);
    const double mid = 0.5 * (t1 + t0);
    // Odd rule: x[0] == 0 is the centre node.
    Complex sum = w[0] * f(a + mid * delta);
    for (std::size_t i = 1; i < x.size(); ++i) {
        const double off = half * x[i];
        sum += w[i] * (f(a + (mid - off) * delta) + f(a + (mid + off) * delta));
    }
    return sum * half * delta;
}

struct Integrator {
    const std::function<Complex(Complex)>& f;
    Complex a;
    Complex delta;
    int max_depth;

    Complex refine(double t0, double t1, Complex whole, double tol, int depth) const {
        const double tm = 0.5 * (t0 + t1);
        const Complex left = panel(f, a, delta, t0, tm);
        const Complex right = panel(f, a, delta, tm, t1);
        const Complex both = left + right;
        if (!is_finite(both))
            throw QuadratureNonConvergence("integrand produced a non-finite value");
        if (std::abs(both - whole) <= tol)
            return both;
        if (depth >= max_depth)
            throw QuadratureNonConvergence("refinement budget of " + std::to_string(max_depth) +
                                           " bisection levels exhausted");
        return refine(t0, tm, left, 0.5 * tol, depth + 1) +
               refine(tm, t1, right, 0.5 * tol, depth + 1);
    }
};

}  // namespace

Complex integrate_segment(const std::function<Complex(Complex)>& f, Complex a, Complex b,
                          const QuadratureOptions& opts) {
    if (!(opts.abs_tol > 0.0))
        throw ContractViolation("quadrature tolerance must be positive");
    const Complex delta = b - a;
    if (delta == Complex{0.0, 0.0})
        return {0.0, 0.0};
    Integrator integ{f, a, delta, opts.max_depth};
    const Complex whole = panel(f, a, delta, 0.0, 1.0);
    return integ.refine(0.0, 1.0, whole, opts.abs_tol, 1);
}

}  // namespace schur
