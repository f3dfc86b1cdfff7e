#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "schur/quadrature.hpp"

using namespace schur;

TEST_CASE("polynomials are integrated exactly") {
    const Complex b{0.3, 0.4};
    const auto v = integrate_segment([](Complex z) { return z * z; }, 0.0, b);
    CHECK(std::abs(v - b * b * b / 3.0) < 1e-15);
    const auto p = integrate_segment([](Complex z) { return std::pow(z, 20); }, 0.0, b);
    CHECK(std::abs(p - std::pow(b, 21) / 21.0) < 1e-15);
}

TEST_CASE("analytic integrand along a complex segment") {
    const Complex a{-0.2, 0.1}, b{0.7, -0.5};
    const auto v = integrate_segment([](Complex z) { return std::exp(z); }, a, b);
    CHECK(std::abs(v - (std::exp(b) - std::exp(a))) < 1e-13);
    const auto l = integrate_segment([](Complex z) { return 1.0 / (1.0 - z); }, 0.0, 0.99);
    CHECK(std::abs(l + std::log(0.01)) < 1e-9);
}

TEST_CASE("endpoint singularities are not sampled") {
    const Complex a{0.0, 0.0}, b{0.5, 0.5};
    auto f = [&](Complex z) {
        if (z == a || z == b)
            throw std::logic_error("endpoint sampled");
        return std::cos(z) / (1.0 + z);
    };
    CHECK_NOTHROW(integrate_segment(f, a, b));
}

TEST_CASE("non-convergence is reported") {
    auto f = [](Complex z) { return 1.0 / (z - Complex{0.5, 1e-13}); };
    CHECK_THROWS_AS(integrate_segment(f, 0.0, 1.0, {1e-14, 6}), QuadratureNonConvergence);
    auto nan = [](Complex) { return Complex{std::nan(""), 0.0}; };
    CHECK_THROWS_AS(integrate_segment(nan, 0.0, 1.0), QuadratureNonConvergence);
}
