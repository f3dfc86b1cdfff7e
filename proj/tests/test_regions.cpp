#include <doctest.h>

#include <numbers>
#include <random>

#include "schur/geometry.hpp"
#include "schur/regions.hpp"
#include "test_support.hpp"

using namespace schur;
using schur::testing::kronrod_segment;

namespace {

bool close(Complex a, Complex b, double tol) { return std::abs(a - b) <= tol; }

Complex zeta_pow(Complex z, int j) { return j == -1 ? 1.0 / z : std::pow(z, j); }

}  // namespace

TEST_CASE("q_value closed forms") {
    const SchurPolynomialSet zeros({0.0, 0.0});
    const Complex z0{0.3, 0.2};
    for (int k = 0; k < 8; ++k) {
        const Complex eps = std::polar(1.0, 0.7 * k);
        CHECK(close(q_value(zeros, -1, z0, eps, half_plane()), -std::log(1.0 - eps * z0 * z0),
                    1e-12));
        CHECK(close(q_value(zeros, 0, z0, eps, disk(0.0, 1.0)), eps * z0 * z0 * z0 / 3.0, 1e-15));
    }
    CHECK(close(q_value(zeros, 0, z0, 0.0, half_plane()), 0.0, 0.0));
}

TEST_CASE("integrand at the origin for j = -1") {
    const double lambda = 0.4;
    const SchurPolynomialSet set({0.0, lambda});
    CHECK(close(integrand(set, 1.0, -1, half_plane(), 0.0), 2.0 * lambda, 1e-15));
    // the removable limit agrees with nearby values
    const Complex eps{0.0, 1.0};
    const Complex near = integrand(set, eps, -1, half_plane(), 1e-7);
    CHECK(close(integrand(set, eps, -1, half_plane(), 0.0), near, 1e-6));
    const SchurPolynomialSet single({0.3});
    const Complex near0 = integrand(single, eps, -1, strip(), {0.0, 1e-7});
    CHECK(close(integrand(single, eps, -1, strip(), 0.0), near0, 1e-6));
}

TEST_CASE("closed-form curve examples") {
    const Complex z0 = 0.5;
    CHECK(close(theorem_a_curve(0.3, z0, 0.0), -0.7 * std::log(1.5) - 1.3 * std::log(0.5),
                1e-15));
    for (double theta : {-2.0, -0.5, 0.3, 1.7, 3.0}) {
        const Complex eps = std::polar(1.0, theta);
        CHECK(close(theorem_a_curve(0.0, z0, theta), -std::log(1.0 - eps * z0 * z0), 1e-15));
        CHECK(close(theorem_a_curve(0.6, z0, -theta), std::conj(theorem_a_curve(0.6, z0, theta)),
                    1e-14));
    }
    CHECK_THROWS_AS(theorem_a_curve(1.0, z0, 0.0), ContractViolation);
    CHECK_THROWS_AS(theorem_a_curve(0.2, z0, -std::numbers::pi), ContractViolation);
}

TEST_CASE("closed-form curve agrees with the general construction") {
    for (double lambda : {0.0, 0.25, 0.7}) {
        const auto setup = theorem_b_setup(lambda);
        CHECK(setup.j == -1);
        CHECK(setup.domain.label() == "half-plane");
        const auto cls = schur_parameters(setup.data);
        REQUIRE(std::holds_alternative<Interior>(cls));
        const SchurPolynomialSet set(std::get<Interior>(cls).gamma);
        const Complex z0{0.4, 0.1};
        for (int k = -3; k <= 4; ++k) {
            const double theta = std::numbers::pi * k / 4.0;
            CHECK(close(q_value(set, -1, z0, std::polar(1.0, theta), setup.domain),
                        theorem_a_curve(lambda, z0, theta), 1e-9));
        }
    }
}

TEST_CASE("region dispatch") {
    RegionRequest req{CaratheodoryData({2.0}), 0, 0.3, half_plane()};
    CHECK(std::holds_alternative<EmptyRegion>(region(req)));

    req.data = CaratheodoryData({1.0, 0.0});
    const auto single = region(req);
    REQUIRE(std::holds_alternative<SinglePoint>(single));
    CHECK(std::get<SinglePoint>(single).w0 == Complex{0.0, 0.0});

    // gamma = (0.5, 1): the unique interpolant is sigma_{0.5}(z).
    req.data = CaratheodoryData({0.5, 0.75});
    const Complex z0{0.3, 0.2};
    req.z0 = z0;
    const auto later = region(req);
    REQUIRE(std::holds_alternative<SinglePoint>(later));
    const auto hp = half_plane();
    const Complex expected = kronrod_segment(
        [&](Complex z) { return hp.map(schur::testing::sigma(0.5, z)) - hp.map(0.5); }, z0);
    CHECK(close(std::get<SinglePoint>(later).w0, expected, 1e-10));

    req.data = CaratheodoryData({0.0, 0.0});
    req.j = -1;
    req.samples = 64;
    const auto jordan = region(req);
    REQUIRE(std::holds_alternative<JordanRegion>(jordan));
    const auto& jr = std::get<JordanRegion>(jordan);
    REQUIRE(jr.boundary.size() == 64);
    for (int k = 0; k < 64; ++k) {
        CHECK(jr.eps_angles[k] == doctest::Approx(2.0 * std::numbers::pi * k / 64));
        CHECK(close(jr.boundary[k], -std::log(1.0 - std::polar(1.0, jr.eps_angles[k]) * z0 * z0),
                    1e-12));
    }
    CHECK(close(jr.interior_witness, 0.0, 1e-15));
    CHECK(convexity_defect(jr.boundary) >= -1e-9);
}

TEST_CASE("request validation") {
    RegionRequest req{CaratheodoryData({0.1}), 0, 0.3, half_plane()};
    CHECK_NOTHROW(req.validate());
    req.j = -2;
    CHECK_THROWS_AS(region(req), ContractViolation);
    req.j = 0;
    req.z0 = 0.0;
    CHECK_THROWS_AS(region(req), ContractViolation);
    req.z0 = 1.0;
    CHECK_THROWS_AS(region(req), ContractViolation);
    req.z0 = 0.3;
    req.samples = 8;
    CHECK_THROWS_AS(region(req), ContractViolation);
}

TEST_CASE("sampled members match an independent integration") {
    const std::vector<Complex> gamma = {{0.2, 0.1}, {-0.3, 0.4}, 0.5};
    const SchurPolynomialSet set(gamma);
    const Complex z0{0.35, -0.25};
    const auto dom = strip();
    bool saw_constant = false;
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        for (int j : {-1, 0, 2}) {
            const auto s = sample_member(set, dom, j, z0, seed);
            CHECK(s.seed == seed);
            CHECK(int(s.zeros.size()) == s.blaschke_degree);
            auto blaschke = [&](Complex z) {
                Complex out = s.unimodular_factor;
                for (Complex a : s.zeros)
                    out *= (z - a) / (1.0 - std::conj(a) * z);
                return out;
            };
            auto f = [&](Complex z) {
                const Complex w = omega_nested(gamma, blaschke(z), z);
                return zeta_pow(z, j) * (dom.map(w) - dom.map(gamma[0]));
            };
            CHECK(close(s.value, kronrod_segment(f, z0), 1e-9));
            if (s.blaschke_degree == 0) {
                saw_constant = true;
                CHECK(close(s.value, q_value(set, j, z0, s.unimodular_factor, dom), 1e-12));
            }
        }
    }
    CHECK(saw_constant);
    CHECK(sample_member(set, dom, 0, z0, 7).value == sample_member(set, dom, 0, z0, 7).value);
}

TEST_CASE("membership") {
    const SchurPolynomialSet set({0.0, 0.3});
    const Complex z0 = 0.5;
    const auto jr = boundary_curve(set, -1, z0, half_plane(), 256);
    CHECK(contains(jr, jr.interior_witness, 1e-6));
    for (int k = 0; k < 256; k += 17) {
        const Complex b = jr.boundary[k];
        CHECK(contains(jr, b, 1e-6));
        CHECK_FALSE(contains(jr, jr.interior_witness + 1.01 * (b - jr.interior_witness), 1e-6));
    }
    for (std::uint64_t seed = 0; seed < 50; ++seed)
        CHECK(contains(jr, sample_member(set, half_plane(), -1, z0, seed).value, 1e-6));

    JordanRegion tiny = jr;
    tiny.boundary.resize(8);
    CHECK_THROWS_AS(contains(tiny, 0.0, 1e-6), ContractViolation);
}
