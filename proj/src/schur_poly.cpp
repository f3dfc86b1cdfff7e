#include "schur/schur_poly.hpp"

#include <cmath>

#include "schur/schur_core.hpp"

namespace schur {

namespace {

void check_closed_disk(Complex v, const char* what) {
    if (!is_finite(v) || std::abs(v) > 1.0 + 1e-12)
        throw ContractViolation(std::string(what) + " must lie in the closed unit disk");
}

Complex checked_ratio(Complex num, Complex den, const char* where) {
    if (std::abs(den) < kDenominatorFloor)
        throw DegenerateDenominator(std::string(where) + ": denominator vanishes");
    return num / den;
}

}  // namespace

Complex eval_poly(const Polynomial& p, Complex z) {
    Complex acc{0.0, 0.0};
    for (auto it = p.coeffs.rbegin(); it != p.coeffs.rend(); ++it)
        acc = acc * z + *it;
    return acc;
}

SchurPolynomialSet::SchurPolynomialSet(std::vector<Complex> gamma) : gamma_(std::move(gamma)) {
    require_interior_parameters(gamma_);
    const std::size_t len = gamma_.size();
    const Complex zero{0.0, 0.0};
    std::vector<Complex> a(len, zero), b(len, zero), at(len, zero), bt(len, zero);
    a[0] = std::conj(gamma_[0]);
    b[0] = 1.0;
    at[0] = 1.0;
    bt[0] = gamma_[0];
    weight_ = 1.0 - std::norm(gamma_[0]);

    // [A' A~'; B' B~'] = [z conj(g); g z 1] [A A~; B B~]
    for (std::size_t k = 1; k < len; ++k) {
        const Complex g = gamma_[k];
        const Complex gbar = std::conj(g);
        std::vector<Complex> na(len, zero), nb(len, zero), nat(len, zero), nbt(len, zero);
        for (std::size_t i = 0; i < len; ++i) {
            const Complex za = i > 0 ? a[i - 1] : zero;
            const Complex zat = i > 0 ? at[i - 1] : zero;
            na[i] = za + gbar * b[i];
            nat[i] = zat + gbar * bt[i];
            nb[i] = g * za + b[i];
            nbt[i] = g * zat + bt[i];
        }
        a.swap(na);
        b.swap(nb);
        at.swap(nat);
        bt.swap(nbt);
        weight_ *= 1.0 - std::norm(g);
    }
    a_.coeffs = std::move(a);
    b_.coeffs = std::move(b);
    a_tilde_.coeffs = std::move(at);
    b_tilde_.coeffs = std::move(bt);
}

SchurPolynomialSet build_polynomials(std::vector<Complex> gamma) {
    return SchurPolynomialSet(std::move(gamma));
}

Complex omega_nested(std::span<const Complex> gamma, Complex eps, Complex z) {
    require_interior_parameters(gamma);
    check_closed_disk(eps, "epsilon");
    check_closed_disk(z, "z");
    Complex w = eps;
    for (std::size_t k = gamma.size(); k-- > 0;)
        w = mobius(gamma[k], z * w);
    return w;
}

Complex omega_rational(const SchurPolynomialSet& set, Complex eps, Complex z) {
    check_closed_disk(eps, "epsilon");
    check_closed_disk(z, "z");
    const Complex ez = eps * z;
    const Complex num = ez * eval_poly(set.a_tilde(), z) + eval_poly(set.b_tilde(), z);
    const Complex den = ez * eval_poly(set.a(), z) + eval_poly(set.b(), z);
    return checked_ratio(num, den, "omega_rational");
}

Complex schur_lift(const SchurPolynomialSet& set, const AnalyticFunction& omega_star, Complex z) {
    const Complex w = omega_star(z);
    if (!is_finite(w) || std::abs(w) > 1.0 + 1e-9)
        throw ContractViolation("schur_lift: omega_star exceeds modulus one");
    const Complex zw = z * w;
    const Complex num = zw * eval_poly(set.a_tilde(), z) + eval_poly(set.b_tilde(), z);
    const Complex den = zw * eval_poly(set.a(), z) + eval_poly(set.b(), z);
    return checked_ratio(num, den, "schur_lift");
}

VariabilityDisk variability_disk(const SchurPolynomialSet& set, Complex z) {
    if (!(std::abs(z) < 1.0))
        throw ContractViolation("variability_disk needs |z| < 1");
    const Complex a = eval_poly(set.a(), z);
    const Complex b = eval_poly(set.b(), z);
    const Complex at = eval_poly(set.a_tilde(), z);
    const Complex bt = eval_poly(set.b_tilde(), z);
    const double z2 = std::norm(z);
    const double den = std::norm(b) - z2 * std::norm(a);
    const Complex center = (std::conj(b) * bt - z2 * std::conj(a) * at) / den;
    const double radius =
        std::pow(std::abs(z), static_cast<double>(set.degree() + 1)) * set.weight() / den;
    return {center, radius};
}

}  // namespace schur
