#include "schur/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace schur {

namespace {

double cross(Complex u, Complex v) { return u.real() * v.imag() - u.imag() * v.real(); }
double dot(Complex u, Complex v) { return u.real() * v.real() + u.imag() * v.imag(); }

double segment_distance(Complex p, Complex q, Complex w) {
    const Complex e = q - p;
    const double len2 = std::norm(e);
    if (len2 == 0.0)
        return std::abs(w - p);
    const double t = std::clamp(dot(w - p, e) / len2, 0.0, 1.0);
    return std::abs(w - (p + t * e));
}

// Coefficients a_m, m = -(N/2) .. (N-1)/2 stored at index m + N/2, with the
// Nyquist term of an even N split evenly between +-N/2.
struct TrigSeries {
    std::vector<Complex> coeffs;
    int lowest = 0;
};

TrigSeries trig_series(std::span<const Complex> samples) {
    const int n = static_cast<int>(samples.size());
    std::vector<Complex> roots(n);
    for (int k = 0; k < n; ++k)
        roots[k] = std::polar(1.0, -2.0 * std::numbers::pi * k / n);

    TrigSeries s;
    s.lowest = -(n / 2);
    const int highest = n % 2 == 0 ? n / 2 : (n - 1) / 2;
    for (int m = s.lowest; m <= highest; ++m) {
        Complex acc{0.0, 0.0};
        const int mm = ((m % n) + n) % n;
        for (int k = 0; k < n; ++k)
            acc += samples[k] * roots[(static_cast<long long>(mm) * k) % n];
        s.coeffs.push_back(acc / static_cast<double>(n));
    }
    if (n % 2 == 0) {
        s.coeffs.front() *= 0.5;
        s.coeffs.back() *= 0.5;
    }
    return s;
}

}  // namespace

double polygon_area(std::span<const Complex> curve) {
    const std::size_t n = curve.size();
    double twice = 0.0;
    for (std::size_t k = 0; k < n; ++k)
        twice += cross(curve[k], curve[(k + 1) % n]);
    return 0.5 * twice;
}

double convexity_defect(std::span<const Complex> curve) {
    const std::size_t n = curve.size();
    if (n < 3)
        return 0.0;
    const double orientation = polygon_area(curve) < 0.0 ? -1.0 : 1.0;
    std::vector<Complex> edges;
    edges.reserve(n);
    for (std::size_t k = 0; k < n; ++k) {
        const Complex e = curve[(k + 1) % n] - curve[k];
        if (std::abs(e) > 0.0)
            edges.push_back(e / std::abs(e));
    }
    double worst = std::numeric_limits<double>::infinity();
    for (std::size_t k = 0; k < edges.size(); ++k)
        worst = std::min(worst, orientation * cross(edges[k], edges[(k + 1) % edges.size()]));
    return edges.size() < 2 ? 0.0 : worst;
}

double total_turning(std::span<const Complex> curve) {
    const std::size_t n = curve.size();
    std::vector<Complex> edges;
    for (std::size_t k = 0; k < n; ++k) {
        const Complex e = curve[(k + 1) % n] - curve[k];
        if (std::abs(e) > 0.0)
            edges.push_back(e);
    }
    double sum = 0.0;
    for (std::size_t k = 0; k < edges.size(); ++k) {
        const Complex u = edges[k];
        const Complex v = edges[(k + 1) % edges.size()];
        sum += std::atan2(cross(u, v), dot(u, v));
    }
    return sum;
}

double min_vertex_separation(std::span<const Complex> curve) {
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < curve.size(); ++i)
        for (std::size_t k = i + 1; k < curve.size(); ++k)
            best = std::min(best, std::abs(curve[i] - curve[k]));
    return best;
}

std::vector<Complex> refine_closed_curve(std::span<const Complex> samples, int factor) {
    if (factor < 1)
        throw ContractViolation("refinement factor must be >= 1");
    if (factor == 1 || samples.size() < 3)
        return {samples.begin(), samples.end()};
    const TrigSeries s = trig_series(samples);
    const int n = static_cast<int>(samples.size());
    const int total = n * factor;
    std::vector<Complex> roots(total);
    for (int l = 0; l < total; ++l)
        roots[l] = std::polar(1.0, 2.0 * std::numbers::pi * l / total);

    std::vector<Complex> out(total);
    for (int l = 0; l < total; ++l) {
        if (l % factor == 0) {
            out[l] = samples[l / factor];
            continue;
        }
        Complex acc{0.0, 0.0};
        for (std::size_t i = 0; i < s.coeffs.size(); ++i) {
            const int m = s.lowest + static_cast<int>(i);
            const long long idx = ((static_cast<long long>(m) * l) % total + total) % total;
            acc += s.coeffs[i] * roots[idx];
        }
        out[l] = acc;
    }
    return out;
}

double interpolant_area(std::span<const Complex> samples) {
    if (samples.size() < 3)
        return 0.0;
    const TrigSeries s = trig_series(samples);
    double sum = 0.0;
    for (std::size_t i = 0; i < s.coeffs.size(); ++i) {
        const int m = s.lowest + static_cast<int>(i);
        sum += m * std::norm(s.coeffs[i]);
    }
    return std::abs(std::numbers::pi * sum);
}

double distance_to_polyline(std::span<const Complex> curve, Complex w) {
    const std::size_t n = curve.size();
    if (n == 0)
        return std::numeric_limits<double>::infinity();
    if (n == 1)
        return std::abs(w - curve[0]);
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t k = 0; k < n; ++k)
        best = std::min(best, segment_distance(curve[k], curve[(k + 1) % n], w));
    return best;
}

double hausdorff_distance(std::span<const Complex> a, std::span<const Complex> b,
                          int refine_factor) {
    const std::vector<Complex> fine_a = refine_closed_curve(a, refine_factor);
    const std::vector<Complex> fine_b = refine_closed_curve(b, refine_factor);
    double worst = 0.0;
    for (Complex p : a)
        worst = std::max(worst, distance_to_polyline(fine_b, p));
    for (Complex p : b)
        worst = std::max(worst, distance_to_polyline(fine_a, p));
    return worst;
}

double max_sagitta_estimate(std::span<const Complex> curve) {
    const std::size_t n = curve.size();
    double worst = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
        const Complex second = curve[(k + 1) % n] - 2.0 * curve[k] + curve[(k + n - 1) % n];
        worst = std::max(worst, std::abs(second) / 8.0);
    }
    return worst;
}

ConvexHull::ConvexHull(std::span<const Complex> samples, double target_sagitta) {
    if (samples.size() < 3)
        throw GeometryDegenerate("hull needs at least three vertices");
    constexpr int kMaxFactor = 128;
    for (factor_ = 8;; factor_ *= 2) {
        vertices_ = refine_closed_curve(samples, factor_);
        if (factor_ >= kMaxFactor || max_sagitta_estimate(vertices_) <= target_sagitta)
            break;
    }
    if (polygon_area(vertices_) < 0.0)
        std::reverse(vertices_.begin(), vertices_.end());
}

double ConvexHull::signed_distance(Complex w) const {
    const std::size_t n = vertices_.size();
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t k = 0; k < n; ++k) {
        const Complex p = vertices_[k];
        const Complex e = vertices_[(k + 1) % n] - p;
        const double len = std::abs(e);
        if (len == 0.0)
            continue;
        best = std::min(best, cross(e, w - p) / len);
    }
    return best;
}

}  // namespace schur
