#include "schur/regions.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <string>

#include "schur/geometry.hpp"
#include "schur/quadrature.hpp"

namespace schur {

namespace {

Complex power(Complex zeta, int j) {
    Complex out{1.0, 0.0};
    for (int k = 0; k < j; ++k)
        out *= zeta;
    return out;
}

void check_z0(Complex z0) {
    const double r = std::abs(z0);
    if (!is_finite(z0) || !(r > 0.0) || !(r < 1.0))
        throw ContractViolation("z0 must satisfy 0 < |z0| < 1");
}

void check_j(int j) {
    if (j < -1)
        throw ContractViolation("j must be >= -1");
}

// zeta^j (value - base), dividing by zeta for j = -1.
Complex weighted(Complex zeta, int j, Complex diff) {
    if (j == -1)
        return diff / zeta;
    return power(zeta, j) * diff;
}

}  // namespace

void RegionRequest::validate() const {
    check_j(j);
    check_z0(z0);
    if (samples < 16)
        throw ContractViolation("at least 16 boundary samples are required");
    tol.validate();
}

Complex integrand(const SchurPolynomialSet& set, Complex eps, int j, const DomainMap& domain,
                  Complex zeta) {
    check_j(j);
    if (!(std::abs(zeta) < 1.0))
        throw ContractViolation("integrand needs |zeta| < 1");
    const Complex g0 = set.gamma()[0];
    if (j == -1 && zeta == Complex{0.0, 0.0}) {
        // omega'(0) = (1 - |g0|^2) * (g1, or eps when n = 0)
        const Complex next = set.degree() >= 1 ? set.gamma()[1] : eps;
        return domain.derivative(g0) * (1.0 - std::norm(g0)) * next;
    }
    const Complex w = omega_rational(set, eps, zeta);
    return weighted(zeta, j, domain.map(w) - domain.map(g0));
}

Complex q_value(const SchurPolynomialSet& set, int j, Complex z0, Complex eps,
                const DomainMap& domain, double quad_tol) {
    check_j(j);
    check_z0(z0);
    if (!(std::abs(eps) <= 1.0 + 1e-12))
        throw ContractViolation("q_value needs |eps| <= 1");
    const Complex base = domain.map(set.gamma()[0]);
    auto f = [&](Complex zeta) {
        return weighted(zeta, j, domain.map(omega_rational(set, eps, zeta)) - base);
    };
    return integrate_segment(f, Complex{0.0, 0.0}, z0, {quad_tol, 20});
}

JordanRegion boundary_curve(const SchurPolynomialSet& set, int j, Complex z0,
                            const DomainMap& domain, int samples, double quad_tol) {
    if (samples < 1)
        throw ContractViolation("boundary_curve needs a positive sample count");
    JordanRegion out;
    out.eps_angles.resize(samples);
    out.boundary.resize(samples);
    for (int k = 0; k < samples; ++k) {
        const double theta = 2.0 * std::numbers::pi * k / samples;
        out.eps_angles[k] = theta;
        out.boundary[k] = q_value(set, j, z0, std::polar(1.0, theta), domain, quad_tol);
    }
    out.interior_witness = q_value(set, j, z0, Complex{0.0, 0.0}, domain, quad_tol);
    return out;
}

Complex single_point_value(const Boundary& boundary, int j, Complex z0, const DomainMap& domain,
                           double quad_tol) {
    check_j(j);
    check_z0(z0);
    const std::size_t i = boundary.unimodular_index;
    if (boundary.gamma_prefix.size() != i + 1)
        throw ContractViolation("boundary prefix length must be unimodular_index + 1");
    // i = 0: the interpolant is the constant c0 and the integrand vanishes
    // identically, even where P(c0) itself is undefined.
    if (i == 0)
        return {0.0, 0.0};
    const Complex tip = boundary.gamma_prefix[i];
    const Complex eps = tip / std::abs(tip);
    const SchurPolynomialSet set(
        std::vector<Complex>(boundary.gamma_prefix.begin(), boundary.gamma_prefix.begin() + i));
    const Complex base = domain.map(set.gamma()[0]);
    auto f = [&](Complex zeta) {
        return weighted(zeta, j, domain.map(omega_rational(set, eps, zeta)) - base);
    };
    return integrate_segment(f, Complex{0.0, 0.0}, z0, {quad_tol, 20});
}

RegionResult region(const RegionRequest& request) {
    request.validate();
    const SchurClassification cls = schur_parameters(request.data, request.tol);
    if (std::holds_alternative<Exterior>(cls))
        return EmptyRegion{};
    if (const auto* b = std::get_if<Boundary>(&cls))
        return SinglePoint{
            single_point_value(*b, request.j, request.z0, request.domain, request.tol.quad_tol)};

    const SchurPolynomialSet set(std::get<Interior>(cls).gamma);
    JordanRegion jordan = boundary_curve(set, request.j, request.z0, request.domain,
                                         request.samples, request.tol.quad_tol);

    const double turning = std::abs(total_turning(jordan.boundary));
    if (std::abs(turning - 2.0 * std::numbers::pi) > 1e-6 ||
        convexity_defect(jordan.boundary) < -request.tol.geom_tol ||
        !(min_vertex_separation(jordan.boundary) > 0.0))
        throw GeometryDegenerate("sampled boundary is not a simple convex polygon");
    return jordan;
}

Complex theorem_a_curve(double lambda, Complex z0, double theta) {
    if (!(lambda >= 0.0 && lambda < 1.0))
        throw ContractViolation("lambda must lie in [0, 1)");
    check_z0(z0);
    if (!(theta > -std::numbers::pi && theta <= std::numbers::pi))
        throw ContractViolation("theta must lie in (-pi, pi]");

    const double s = std::sin(0.5 * theta);
    const double c = std::cos(0.5 * theta);
    const double radical = std::sqrt(1.0 - lambda * lambda * s * s);
    const Complex h = std::polar(1.0, 0.5 * theta) * z0;
    const Complex arg_minus = 1.0 - h / Complex{-radical, lambda * s};
    const Complex arg_plus = 1.0 - h / Complex{radical, lambda * s};
    for (Complex a : {arg_minus, arg_plus}) {
        if (std::abs(a.imag()) <= 1e-14 && a.real() <= 1e-14)
            throw BranchCutHit("theorem_a_curve: logarithm argument on the branch cut");
    }
    const double ratio = lambda * c / radical;
    return -(1.0 - ratio) * std::log(arg_minus) - (1.0 + ratio) * std::log(arg_plus);
}

ConvexSetup theorem_b_setup(double lambda) {
    if (!(lambda >= 0.0 && lambda < 1.0))
        throw ContractViolation("lambda must lie in [0, 1)");
    // g(0) = P(0) = 1 and g'(0) = P'(0) c1 = 2 c1.
    return {half_plane(), CaratheodoryData({Complex{0.0, 0.0}, Complex{lambda, 0.0}}), -1};
}

OracleSample sample_member(const SchurPolynomialSet& set, const DomainMap& domain, int j,
                           Complex z0, std::uint64_t seed, double quad_tol) {
    check_j(j);
    check_z0(z0);
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> degree_dist(0, 6);
    std::uniform_real_distribution<double> unit(0.0, 1.0);

    OracleSample sample;
    sample.seed = seed;
    sample.blaschke_degree = degree_dist(rng);
    for (int k = 0; k < sample.blaschke_degree; ++k) {
        const double r = 0.95 * std::sqrt(unit(rng));
        sample.zeros.push_back(std::polar(r, 2.0 * std::numbers::pi * unit(rng)));
    }
    sample.unimodular_factor = std::polar(1.0, 2.0 * std::numbers::pi * unit(rng));

    const AnalyticFunction blaschke = [&sample](Complex zeta) {
        Complex out = sample.unimodular_factor;
        for (Complex a : sample.zeros)
            out *= (zeta - a) / (1.0 - std::conj(a) * zeta);
        return out;
    };
    const Complex base = domain.map(set.gamma()[0]);
    auto f = [&](Complex zeta) {
        return weighted(zeta, j, domain.map(schur_lift(set, blaschke, zeta)) - base);
    };
    sample.value = integrate_segment(f, Complex{0.0, 0.0}, z0, {quad_tol, 20});
    return sample;
}

bool contains(const JordanRegion& region, Complex w, double geom_tol) {
    if (region.boundary.size() < 16)
        throw ContractViolation("contains needs at least 16 boundary samples");
    return ConvexHull(region.boundary).contains(w, geom_tol);
}

}  // namespace schur
