#ifndef SCHUR_SCHUR_POLY_HPP
#define SCHUR_SCHUR_POLY_HPP

#include <functional>
#include <span>
#include <vector>

#include "schur/types.hpp"

namespace schur {

// Dense polynomial, coefficients in ascending degree order.
struct Polynomial {
    std::vector<Complex> coeffs;
};

Complex eval_poly(const Polynomial& p, Complex z);

// The Schur polynomials A_n, B_n, A~_n, B~_n of an interior Schur parameter.
// Every polynomial is stored with length n+1.
class SchurPolynomialSet {
public:
    // Throws ContractViolation unless gamma is non-empty with all |gamma_p| < 1.
    explicit SchurPolynomialSet(std::vector<Complex> gamma);

    std::span<const Complex> gamma() const { return gamma_; }
    std::size_t degree() const { return gamma_.size() - 1; }

    const Polynomial& a() const { return a_; }
    const Polynomial& b() const { return b_; }
    const Polynomial& a_tilde() const { return a_tilde_; }
    const Polynomial& b_tilde() const { return b_tilde_; }

    // prod_k (1 - |gamma_k|^2)
    double weight() const { return weight_; }

private:
    std::vector<Complex> gamma_;
    Polynomial a_, b_, a_tilde_, b_tilde_;
    double weight_ = 1.0;
};

SchurPolynomialSet build_polynomials(std::vector<Complex> gamma);

// omega_{gamma,eps}(z) = sigma_{g0}(z sigma_{g1}( ... z sigma_{gn}(eps z) ... )).
Complex omega_nested(std::span<const Complex> gamma, Complex eps, Complex z);

// Same function through the linear-fractional form
// (eps z A~ + B~) / (eps z A + B).
Complex omega_rational(const SchurPolynomialSet& set, Complex eps, Complex z);

using AnalyticFunction = std::function<Complex(Complex)>;

// Interpolant (z A~ w + B~) / (z A w + B) with w = omega_star(z).  The bound
// |omega_star| <= 1 is checked at z only (slack 1e-9).
Complex schur_lift(const SchurPolynomialSet& set, const AnalyticFunction& omega_star, Complex z);

struct VariabilityDisk {
    Complex center;
    double radius = 0.0;
};

// Closed disk containing omega(z) for every interpolant omega; |z| < 1.
VariabilityDisk variability_disk(const SchurPolynomialSet& set, Complex z);

}  // namespace schur

#endif  // SCHUR_SCHUR_POLY_HPP
