#ifndef SCHUR_REGIONS_HPP
#define SCHUR_REGIONS_HPP

#include <cstdint>
#include <span>
#include <variant>
#include <vector>

#include "schur/domains.hpp"
#include "schur/schur_core.hpp"
#include "schur/schur_poly.hpp"
#include "schur/types.hpp"

namespace schur {

// Variability region of int_0^{z0} zeta^j (g(zeta) - g(0)) dzeta over
// analytic g into the domain with P^{-1} o g = c0 + ... + cn z^n + ...
struct RegionRequest {
    CaratheodoryData data;
    int j = 0;
    Complex z0;
    DomainMap domain;
    int samples = 512;
    ToleranceConfig tol;

    // Throws ContractViolation unless j >= -1, 0 < |z0| < 1 and samples >= 16.
    void validate() const;
};

struct EmptyRegion {};

struct SinglePoint {
    Complex w0;
};

struct JordanRegion {
    std::vector<double> eps_angles;  // theta_k = 2 pi k / N
    std::vector<Complex> boundary;   // Q(z0, e^{i theta_k})
    Complex interior_witness;        // Q(z0, 0)
};

using RegionResult = std::variant<EmptyRegion, SinglePoint, JordanRegion>;

// zeta^j (P(omega_{gamma,eps}(zeta)) - P(gamma_0)); for j = -1 at zeta = 0 the
// removable limit P'(gamma_0) omega'_{gamma,eps}(0).
Complex integrand(const SchurPolynomialSet& set, Complex eps, int j, const DomainMap& domain,
                  Complex zeta);

// Q_{gamma,j}(z0, eps) by adaptive quadrature along [0, z0].
Complex q_value(const SchurPolynomialSet& set, int j, Complex z0, Complex eps,
                const DomainMap& domain, double quad_tol = 1e-10);

// Boundary samples at N equispaced angles and the interior witness.
JordanRegion boundary_curve(const SchurPolynomialSet& set, int j, Complex z0,
                            const DomainMap& domain, int samples, double quad_tol = 1e-10);

// The single value for boundary data: the unique interpolant integrated
// along [0, z0].
Complex single_point_value(const Boundary& boundary, int j, Complex z0, const DomainMap& domain,
                           double quad_tol = 1e-10);

RegionResult region(const RegionRequest& request);

// Closed-form boundary of the log f'(z0) region for convex f with
// f''(0) = 2 lambda; principal logarithms.
Complex theorem_a_curve(double lambda, Complex z0, double theta);

struct ConvexSetup {
    DomainMap domain;
    CaratheodoryData data;
    int j;
};

// Half-plane, data (0, lambda), j = -1: the same region as theorem_a_curve.
ConvexSetup theorem_b_setup(double lambda);

struct OracleSample {
    std::uint64_t seed = 0;
    int blaschke_degree = 0;
    std::vector<Complex> zeros;
    Complex unimodular_factor{1.0, 0.0};
    Complex value;
};

// Draws a random finite Blaschke product omega*, lifts it to an interpolant
// of gamma's data, and integrates zeta^j (g - g(0)) for g = P o omega.
OracleSample sample_member(const SchurPolynomialSet& set, const DomainMap& domain, int j,
                           Complex z0, std::uint64_t seed, double quad_tol = 1e-10);

// Point-in-convex-hull test against the (refined) sampled boundary.  Builds
// the hull on every call; keep a ConvexHull for repeated queries.
bool contains(const JordanRegion& region, Complex w, double geom_tol);

}  // namespace schur

#endif  // SCHUR_REGIONS_HPP
