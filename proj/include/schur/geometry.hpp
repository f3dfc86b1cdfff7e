#ifndef SCHUR_GEOMETRY_HPP
#define SCHUR_GEOMETRY_HPP

#include <span>
#include <vector>

#include "schur/types.hpp"

namespace schur {

// Most negative normalized cross product of consecutive edges, after
// orienting the curve counter-clockwise.  Non-negative for a convex polygon.
// Zero-length edges are skipped.
double convexity_defect(std::span<const Complex> curve);

// Signed shoelace area; positive for counter-clockwise order.
double polygon_area(std::span<const Complex> curve);

// Sum of signed turning angles along the closed polygon; +-2 pi for a simple
// convex curve.
double total_turning(std::span<const Complex> curve);

// Smallest distance between two distinct vertices.
double min_vertex_separation(std::span<const Complex> curve);

// Samples of the trigonometric interpolant through `samples` (taken at
// equispaced parameters over one period) on a grid `factor` times finer.
// Every factor-th output equals the corresponding input sample.
std::vector<Complex> refine_closed_curve(std::span<const Complex> samples, int factor);

// Area enclosed by the trigonometric interpolant of equispaced samples of a
// closed curve, pi * sum_m m |a_m|^2, taken positive.
double interpolant_area(std::span<const Complex> samples);

// Euclidean distance from w to the closed polyline through `curve`.
double distance_to_polyline(std::span<const Complex> curve, Complex w);

// Largest |v[k+1] - 2 v[k] + v[k-1]| / 8 over the closed polygon, which
// approximates the largest chord sagitta of a smooth sampled curve.
double max_sagitta_estimate(std::span<const Complex> curve);

// Symmetric Hausdorff distance between two closed curves given by
// equispaced samples; each curve is refined by trigonometric interpolation
// before vertex-to-polyline distances are measured.
double hausdorff_distance(std::span<const Complex> a, std::span<const Complex> b,
                          int refine_factor = 16);

// Convex polygon through boundary samples refined by trigonometric
// interpolation, oriented counter-clockwise.  The refinement factor doubles
// from 8 until the estimated chord sagitta (second difference / 8) drops
// below `target_sagitta`, capped at factor 128.
class ConvexHull {
public:
    // `samples` must be equispaced in the curve parameter and in curve order.
    explicit ConvexHull(std::span<const Complex> samples, double target_sagitta = 1e-8);

    // Minimum over edges of the inward distance to the edge line: positive
    // inside, negative outside (bounded by minus the Euclidean distance).
    double signed_distance(Complex w) const;

    bool contains(Complex w, double geom_tol) const { return signed_distance(w) >= -geom_tol; }

    // Unsigned distance to the polygon boundary.
    double boundary_distance(Complex w) const { return distance_to_polyline(vertices_, w); }

    std::span<const Complex> vertices() const { return vertices_; }
    int refine_factor() const { return factor_; }

private:
    std::vector<Complex> vertices_;
    int factor_ = 1;
};

}  // namespace schur

#endif  // SCHUR_GEOMETRY_HPP
