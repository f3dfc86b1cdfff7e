#include "schur/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>
#include <sstream>

#include "schur/schur_core.hpp"
#include "schur/schur_poly.hpp"

namespace schur::verify {

namespace {

Complex random_in_disk(std::mt19937_64& rng, double radius) {
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    const double r = radius * std::sqrt(unit(rng));
    return std::polar(r, 2.0 * std::numbers::pi * unit(rng));
}

Complex zpow(Complex z, std::size_t n) {
    Complex out{1.0, 0.0};
    for (std::size_t k = 0; k < n; ++k)
        out *= z;
    return out;
}

struct Accumulators {
    double mirror = 0.0;
    double determinant = 0.0;
    double coercivity = std::numeric_limits<double>::infinity();
    double domination = std::numeric_limits<double>::infinity();
    double equivalence = 0.0;
    double round_trip = 0.0;
};

void check_gamma(const std::vector<Complex>& gamma, std::mt19937_64& rng, Accumulators& acc) {
    const SchurPolynomialSet set(gamma);
    const std::size_t n = set.degree();
    constexpr int kAngles = 64;

    // Identities on |z| in {0.3, 0.7, 1.0}.
    for (double r : {0.3, 0.7, 1.0}) {
        for (int k = 0; k < kAngles; ++k) {
            const Complex z = std::polar(r, 2.0 * std::numbers::pi * k / kAngles);
            const Complex a = eval_poly(set.a(), z), b = eval_poly(set.b(), z);
            const Complex at = eval_poly(set.a_tilde(), z), bt = eval_poly(set.b_tilde(), z);
            const Complex zr = 1.0 / std::conj(z);
            const Complex zn = zpow(z, n);
            acc.mirror = std::max({acc.mirror, std::abs(at - zn * std::conj(eval_poly(set.b(), zr))),
                                   std::abs(bt - zn * std::conj(eval_poly(set.a(), zr)))});
            acc.determinant =
                std::max(acc.determinant, std::abs(at * b - a * bt - zn * set.weight()));
        }
    }
    // Inequalities on the radial x angular grid of the closed disk.
    for (int ri = 1; ri <= 10; ++ri) {
        for (int k = 0; k < kAngles; ++k) {
            const Complex z = std::polar(0.1 * ri, 2.0 * std::numbers::pi * k / kAngles);
            const Complex a = eval_poly(set.a(), z), b = eval_poly(set.b(), z);
            const Complex bt = eval_poly(set.b_tilde(), z);
            acc.coercivity = std::min(acc.coercivity, std::norm(b) - std::norm(a) - set.weight());
            acc.domination = std::min(acc.domination, std::abs(b) - std::abs(bt));
        }
    }
    // Nested vs rational form at a couple of random points.
    for (int k = 0; k < 2; ++k) {
        const Complex eps = random_in_disk(rng, 1.0);
        const Complex z = random_in_disk(rng, 1.0);
        acc.equivalence =
            std::max(acc.equivalence, std::abs(omega_nested(gamma, eps, z) - omega_rational(set, eps, z)));
    }
    const SchurClassification cls = schur_parameters(data_from_parameters(gamma));
    if (const auto* in = std::get_if<Interior>(&cls)) {
        for (std::size_t p = 0; p < gamma.size(); ++p)
            acc.round_trip = std::max(acc.round_trip, std::abs(in->gamma[p] - gamma[p]));
    } else {
        acc.round_trip = std::numeric_limits<double>::infinity();
    }
}

}  // namespace

std::vector<Complex> random_gamma(std::mt19937_64& rng, int max_degree, double radius) {
    std::uniform_int_distribution<int> degree(0, max_degree);
    const int n = degree(rng);
    std::vector<Complex> gamma(n + 1);
    for (auto& g : gamma)
        g = random_in_disk(rng, radius);
    return gamma;
}

std::vector<PropertyResult> run_property_suites(const VerifyOptions& opts) {
    std::mt19937_64 rng(opts.seed);
    Accumulators acc;
    if (opts.gamma) {
        check_gamma(*opts.gamma, rng, acc);
    } else {
        for (int t = 0; t < opts.trials; ++t)
            check_gamma(random_gamma(rng, 8, 0.9), rng, acc);
    }
    std::vector<PropertyResult> out = {
        {"mirror identity", acc.mirror, 1e-10, true, false},
        {"determinant identity", acc.determinant, 1e-10, true, false},
        {"coercivity slack", acc.coercivity, -1e-10, false, false},
        {"strict domination margin", acc.domination, 0.0, false, false},
        {"nested vs rational", acc.equivalence, 1e-12, true, false},
        {"schur round trip", acc.round_trip, 1e-8, true, false},
    };
    for (auto& r : out)
        r.passed = r.upper_bound ? r.measured < r.threshold : r.measured > r.threshold;
    return out;
}

std::string format_table(const std::vector<PropertyResult>& results) {
    std::ostringstream os;
    char line[160];
    std::snprintf(line, sizeof line, "%-26s %14s %14s  %s\n", "property", "measured", "bound",
                  "status");
    os << line;
    for (const auto& r : results) {
        char bound[32];
        std::snprintf(bound, sizeof bound, "%s %.1e", r.upper_bound ? "<" : ">", r.threshold);
        std::snprintf(line, sizeof line, "%-26s %14.6e %14s  %s\n", r.name.c_str(), r.measured,
                      bound, r.passed ? "PASS" : "FAIL");
        os << line;
    }
    return os.str();
}

}  // namespace schur::verify
