#include "schur/schur_core.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace schur {

void ToleranceConfig::validate() const {
    if (!(cls_tol >= 0.0 && cls_tol < 1.0))
        throw ContractViolation("cls_tol must lie in [0, 1)");
    if (!(quad_tol > 0.0))
        throw ContractViolation("quad_tol must be positive");
    if (!(geom_tol > 0.0))
        throw ContractViolation("geom_tol must be positive");
}

CaratheodoryData::CaratheodoryData(std::vector<Complex> coeffs)
    : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty())
        throw ContractViolation("Caratheodory data needs at least one coefficient");
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (!is_finite(coeffs_[i]))
            throw ContractViolation("coefficient " + std::to_string(i) + " is not finite");
    }
}

Complex mobius(Complex a, Complex z) {
    const Complex den = 1.0 + std::conj(a) * z;
    if (std::abs(den) < kDenominatorFloor)
        throw DegenerateDenominator("mobius: 1 + conj(a) z vanishes");
    return (z + a) / den;
}

Complex mobius_inverse(Complex a, Complex w) {
    const Complex den = 1.0 - std::conj(a) * w;
    if (std::abs(den) < kDenominatorFloor)
        throw DegenerateDenominator("mobius_inverse: 1 - conj(a) w vanishes");
    return (w - a) / den;
}

void require_interior_parameters(std::span<const Complex> gamma) {
    if (gamma.empty())
        throw ContractViolation("Schur parameter must be non-empty");
    for (std::size_t p = 0; p < gamma.size(); ++p) {
        if (!is_finite(gamma[p]) || !(std::abs(gamma[p]) < 1.0))
            throw ContractViolation("Schur parameter entry " + std::to_string(p) +
                                    " has modulus >= 1");
    }
}

std::vector<Complex> schur_step(std::span<const Complex> c, Complex gamma) {
    if (c.size() < 2)
        throw ContractViolation("schur_step needs at least two coefficients");
    if (!(std::abs(gamma) < 1.0))
        throw ContractViolation("schur_step needs |gamma| < 1");
    if (gamma != c[0])
        throw ContractViolation("schur_step: gamma must equal the leading coefficient");

    const double scale = 1.0 - std::norm(gamma);
    const Complex gbar = std::conj(gamma);
    std::vector<Complex> next(c.size() - 1);
    next[0] = c[1] / scale;
    for (std::size_t p = 1; p < next.size(); ++p) {
        Complex acc{0.0, 0.0};
        for (std::size_t l = 1; l <= p; ++l)
            acc += next[p - l] * c[l];
        next[p] = (c[p + 1] + gbar * acc) / scale;
    }
    return next;
}

SchurClassification schur_parameters(const CaratheodoryData& data, const ToleranceConfig& tol) {
    tol.validate();
    std::vector<Complex> current(data.coeffs().begin(), data.coeffs().end());
    const std::size_t n = data.degree();
    std::vector<Complex> gamma;
    gamma.reserve(n + 1);

    for (std::size_t j = 0; j <= n; ++j) {
        const Complex g = current[0];
        const double modulus = std::abs(g);
        gamma.push_back(g);

        if (modulus > 1.0 + tol.cls_tol)
            return Exterior{j, ExteriorReason::ModulusExceedsOne};

        if (std::abs(modulus - 1.0) <= tol.cls_tol) {
            for (std::size_t q = 1; q < current.size(); ++q) {
                if (std::abs(current[q]) > tol.cls_tol)
                    return Exterior{j + q, ExteriorReason::UnimodularWithNonzeroTail};
            }
            return Boundary{std::move(gamma), j};
        }

        if (j < n)
            current = schur_step(current, g);
    }
    return Interior{std::move(gamma)};
}

namespace series {

std::vector<Complex> multiply(std::span<const Complex> a, std::span<const Complex> b) {
    const std::size_t len = std::min(a.size(), b.size());
    std::vector<Complex> out(len);
    for (std::size_t k = 0; k < len; ++k) {
        Complex acc{0.0, 0.0};
        for (std::size_t i = 0; i <= k; ++i)
            acc += a[i] * b[k - i];
        out[k] = acc;
    }
    return out;
}

std::vector<Complex> divide(std::span<const Complex> num, std::span<const Complex> den) {
    const std::size_t len = std::min(num.size(), den.size());
    if (len == 0)
        return {};
    if (std::abs(den[0]) < kDenominatorFloor)
        throw DegenerateDenominator("series divide: zero constant term");
    std::vector<Complex> out(len);
    for (std::size_t k = 0; k < len; ++k) {
        Complex acc = num[k];
        for (std::size_t i = 1; i <= k; ++i)
            acc -= den[i] * out[k - i];
        out[k] = acc / den[0];
    }
    return out;
}

}  // namespace series

CaratheodoryData data_from_parameters(std::span<const Complex> gamma) {
    require_interior_parameters(gamma);
    const std::size_t len = gamma.size();

    // Innermost function is omega_{gamma,0}'s seed 0; wrap w -> sigma_g(z w)
    // from gamma_n outwards, truncating at z^n.
    std::vector<Complex> w(len, Complex{0.0, 0.0});
    std::vector<Complex> num(len), den(len);
    for (std::size_t k = len; k-- > 0;) {
        const Complex g = gamma[k];
        // u = z * w
        std::vector<Complex> u(len, Complex{0.0, 0.0});
        for (std::size_t i = 0; i + 1 < len; ++i)
            u[i + 1] = w[i];
        for (std::size_t i = 0; i < len; ++i) {
            num[i] = u[i];
            den[i] = std::conj(g) * u[i];
        }
        num[0] += g;
        den[0] += 1.0;
        w = series::divide(num, den);
    }
    return CaratheodoryData(std::move(w));
}

}  // namespace schur
