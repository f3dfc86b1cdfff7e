#include <doctest.h>

#include <random>

#include "schur/schur_core.hpp"
#include "test_support.hpp"

using namespace schur;
using schur::testing::random_in_disk;

namespace {

bool close(Complex a, Complex b, double tol) { return std::abs(a - b) <= tol; }

}  // namespace

TEST_CASE("mobius examples") {
    CHECK(close(mobius(0.0, {0.3, 0.4}), {0.3, 0.4}, 0.0));
    CHECK(close(mobius(0.7, 0.0), 0.7, 0.0));
    CHECK(close(mobius(0.5, 0.5), 0.8, 1e-15));
    CHECK_THROWS_AS(mobius(0.5, -2.0), DegenerateDenominator);
}

TEST_CASE("mobius composed with its inverse is the identity") {
    std::mt19937_64 rng(11);
    for (int t = 0; t < 100; ++t) {
        const Complex a = random_in_disk(rng, 0.99);
        const Complex z = random_in_disk(rng, 1.0);
        CHECK(close(mobius(a, mobius_inverse(a, z)), z, 1e-12));
    }
}

TEST_CASE("mobius maps the closed disk into itself") {
    std::mt19937_64 rng(5);
    for (int t = 0; t < 200; ++t) {
        const Complex a = random_in_disk(rng, 0.95);
        const Complex z = std::polar(1.0, 6.283 * t / 200.0);
        CHECK(std::abs(mobius(a, z)) == doctest::Approx(1.0).epsilon(1e-12));
    }
}

TEST_CASE("schur_step examples") {
    const std::vector<Complex> c2 = {0.5, 0.375};
    auto out = schur_step(c2, 0.5);
    REQUIRE(out.size() == 1);
    CHECK(close(out[0], 0.5, 1e-15));

    const std::vector<Complex> shifted = {0.0, {0.1, 0.2}, -0.3, {0.0, 0.7}};
    out = schur_step(shifted, 0.0);
    REQUIRE(out.size() == 3);
    for (std::size_t i = 0; i < out.size(); ++i)
        CHECK(out[i] == shifted[i + 1]);

    // Oracle: Taylor coefficients of sigma_{0.5}(z sigma_{0.5}(2z/3)) and of
    // its inner function sigma_{0.5}(2z/3), by Cauchy integrals.
    using schur::testing::sigma;
    const auto outer = schur::testing::taylor_coefficients(
        [](Complex z) { return sigma(0.5, z * sigma(0.5, z * (2.0 / 3.0))); }, 3);
    const auto inner = schur::testing::taylor_coefficients(
        [](Complex z) { return sigma(0.5, z * (2.0 / 3.0)); }, 2);
    CHECK(close(outer[0], 0.5, 1e-14));
    CHECK(close(outer[1], 0.375, 1e-14));
    CHECK(close(outer[2], 0.28125, 1e-14));
    CHECK(close(inner[0], 0.5, 1e-14));
    CHECK(close(inner[1], 0.5, 1e-14));

    const std::vector<Complex> c3 = {0.5, 0.375, 0.28125};
    out = schur_step(c3, 0.5);
    REQUIRE(out.size() == 2);
    CHECK(close(out[0], inner[0], 1e-14));
    CHECK(close(out[1], inner[1], 1e-14));
}

TEST_CASE("schur_step rejects contract violations") {
    const std::vector<Complex> one = {0.5};
    CHECK_THROWS_AS(schur_step(one, 0.5), ContractViolation);
    const std::vector<Complex> big = {1.0, 0.0};
    CHECK_THROWS_AS(schur_step(big, 1.0), ContractViolation);
    const std::vector<Complex> c = {0.5, 0.1};
    CHECK_THROWS_AS(schur_step(c, 0.4), ContractViolation);
}

TEST_CASE("CaratheodoryData validation") {
    CHECK_THROWS_AS(CaratheodoryData({}), ContractViolation);
    CHECK_THROWS_AS(CaratheodoryData({Complex{std::nan(""), 0.0}}), ContractViolation);
    CHECK(CaratheodoryData({0.1, 0.2}).degree() == 1);
}

TEST_CASE("schur_parameters examples") {
    SUBCASE("modulus exceeds one") {
        const auto cls = schur_parameters(CaratheodoryData({2.0, 0.0}));
        const auto* ex = std::get_if<Exterior>(&cls);
        REQUIRE(ex);
        CHECK(ex->witness_index == 0);
        CHECK(ex->reason == ExteriorReason::ModulusExceedsOne);
    }
    SUBCASE("unimodular with zero tail") {
        const auto cls = schur_parameters(CaratheodoryData({1.0, 0.0}));
        const auto* b = std::get_if<Boundary>(&cls);
        REQUIRE(b);
        CHECK(b->unimodular_index == 0);
        REQUIRE(b->gamma_prefix.size() == 1);
        CHECK(b->gamma_prefix[0] == Complex{1.0, 0.0});
    }
    SUBCASE("interior") {
        const auto cls = schur_parameters(CaratheodoryData({0.5, 0.375}));
        const auto* in = std::get_if<Interior>(&cls);
        REQUIRE(in);
        REQUIRE(in->gamma.size() == 2);
        CHECK(close(in->gamma[0], 0.5, 1e-15));
        CHECK(close(in->gamma[1], 0.5, 1e-15));
    }
    SUBCASE("unimodular with nonzero tail") {
        const auto cls = schur_parameters(CaratheodoryData({1.0, 0.0, 0.3}));
        const auto* ex = std::get_if<Exterior>(&cls);
        REQUIRE(ex);
        CHECK(ex->reason == ExteriorReason::UnimodularWithNonzeroTail);
        CHECK(ex->witness_index == 2);
    }
    SUBCASE("boundary at a later index") {
        // gamma_0 = 0.5, c^{(1)}_0 = 0.75 / 0.75 = 1
        const auto cls = schur_parameters(CaratheodoryData({0.5, 0.75}));
        const auto* b = std::get_if<Boundary>(&cls);
        REQUIRE(b);
        CHECK(b->unimodular_index == 1);
        CHECK(close(b->gamma_prefix[1], 1.0, 1e-15));
    }
    SUBCASE("exterior at a later index") {
        const auto cls = schur_parameters(CaratheodoryData({0.5, 0.9}));
        const auto* ex = std::get_if<Exterior>(&cls);
        REQUIRE(ex);
        CHECK(ex->witness_index == 1);
        CHECK(ex->reason == ExteriorReason::ModulusExceedsOne);
    }
}

TEST_CASE("classification tolerance band") {
    ToleranceConfig tol;
    CHECK(std::holds_alternative<Boundary>(schur_parameters(CaratheodoryData({1.0 + 5e-13}), tol)));
    CHECK(std::holds_alternative<Boundary>(schur_parameters(CaratheodoryData({1.0 - 5e-13}), tol)));
    CHECK(std::holds_alternative<Exterior>(schur_parameters(CaratheodoryData({1.0 + 1e-11}), tol)));
    CHECK(std::holds_alternative<Interior>(schur_parameters(CaratheodoryData({1.0 - 1e-11}), tol)));
    CHECK(std::holds_alternative<Boundary>(
        schur_parameters(CaratheodoryData({1.0, 5e-13}), tol)));
    tol.cls_tol = 1.5;
    CHECK_THROWS_AS(schur_parameters(CaratheodoryData({0.0}), tol), ContractViolation);
}

TEST_CASE("data_from_parameters examples") {
    const std::vector<Complex> zeros(4, Complex{0.0, 0.0});
    const auto c0 = data_from_parameters(zeros);
    for (Complex c : c0.coeffs())
        CHECK(c == Complex{0.0, 0.0});

    const std::vector<Complex> half = {0.5, 0.5};
    const auto c1 = data_from_parameters(half);
    CHECK(close(c1[0], 0.5, 1e-15));
    CHECK(close(c1[1], 0.375, 1e-15));

    const std::vector<Complex> single = {{0.2, -0.3}};
    CHECK(data_from_parameters(single)[0] == Complex{0.2, -0.3});

    const std::vector<Complex> bad = {0.2, 1.0};
    CHECK_THROWS_AS(data_from_parameters(bad), ContractViolation);
}

TEST_CASE("data_from_parameters matches Taylor coefficients of the nested form") {
    std::mt19937_64 rng(3);
    for (int t = 0; t < 20; ++t) {
        std::vector<Complex> gamma(1 + t % 6);
        for (auto& g : gamma)
            g = random_in_disk(rng, 0.8);
        auto omega = [&](Complex z) {
            Complex w{0.0, 0.0};
            for (std::size_t k = gamma.size(); k-- > 0;)
                w = schur::testing::sigma(gamma[k], z * w);
            return w;
        };
        const auto expected = schur::testing::taylor_coefficients(omega, gamma.size());
        const auto got = data_from_parameters(gamma);
        for (std::size_t p = 0; p < gamma.size(); ++p)
            CHECK(close(got[p], expected[p], 1e-12));
    }
}

TEST_CASE("round trip and trichotomy over random parameters") {
    std::mt19937_64 rng(2024);
    std::uniform_int_distribution<int> degree(0, 8);
    double worst = 0.0;
    for (int t = 0; t < 500; ++t) {
        std::vector<Complex> gamma(degree(rng) + 1);
        for (auto& g : gamma)
            g = random_in_disk(rng, 0.9);
        const auto cls = schur_parameters(data_from_parameters(gamma));
        const auto* in = std::get_if<Interior>(&cls);
        REQUIRE(in);
        REQUIRE(in->gamma.size() == gamma.size());
        for (std::size_t p = 0; p < gamma.size(); ++p)
            worst = std::max(worst, std::abs(in->gamma[p] - gamma[p]));
    }
    CHECK(worst < 1e-8);

    // Every input gets exactly one tag; interior results keep the length.
    for (int t = 0; t < 300; ++t) {
        std::vector<Complex> c(degree(rng) + 1);
        for (auto& v : c)
            v = random_in_disk(rng, 1.5);
        const auto cls = schur_parameters(CaratheodoryData(c));
        CHECK(cls.index() < 3);
        if (const auto* in = std::get_if<Interior>(&cls)) {
            CHECK(in->gamma.size() == c.size());
            for (Complex g : in->gamma)
                CHECK(std::abs(g) <= 1.0 - 1e-12);
        }
    }
}

TEST_CASE("series helpers") {
    const std::vector<Complex> one_minus_z = {1.0, -1.0, 0.0, 0.0};
    const std::vector<Complex> one = {1.0, 0.0, 0.0, 0.0};
    const auto geo = series::divide(one, one_minus_z);
    for (Complex c : geo)
        CHECK(c == Complex{1.0, 0.0});
    const auto back = series::multiply(geo, one_minus_z);
    CHECK(back[0] == Complex{1.0, 0.0});
    for (std::size_t i = 1; i < back.size(); ++i)
        CHECK(back[i] == Complex{0.0, 0.0});
}
