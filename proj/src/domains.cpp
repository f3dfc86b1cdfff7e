#include "schur/domains.hpp"

#include <charconv>
#include <cmath>
#include <vector>

namespace schur {

namespace {

Complex guarded_div(Complex num, Complex den, const char* where) {
    if (std::abs(den) < kDenominatorFloor)
        throw DegenerateDenominator(where);
    return num / den;
}

std::string format_number(double v) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

}  // namespace

DomainMap half_plane() {
    return DomainMap(
        "half-plane",
        [](Complex z) { return guarded_div(1.0 + z, 1.0 - z, "half-plane map at z = 1"); },
        [](Complex z) {
            const Complex d = 1.0 - z;
            return guarded_div(Complex{2.0, 0.0}, d * d, "half-plane derivative at z = 1");
        },
        [](Complex w) { return guarded_div(w - 1.0, w + 1.0, "half-plane inverse at w = -1"); });
}

DomainMap disk(Complex center, double radius) {
    if (!(radius > 0.0) || !std::isfinite(radius) || !is_finite(center))
        throw ContractViolation("disk needs a finite center and positive radius");
    std::string label = "disk:" + format_number(center.real()) + "," +
                        format_number(center.imag()) + "," + format_number(radius);
    return DomainMap(
        std::move(label),
        [=](Complex z) { return center + radius * z; },
        [=](Complex) { return Complex{radius, 0.0}; },
        [=](Complex w) { return (w - center) / radius; });
}

DomainMap strip() {
    // (1+z)/(1-z) has positive real part on the disk, so the principal
    // logarithm never meets its cut there.
    return DomainMap(
        "strip",
        [](Complex z) { return std::log(guarded_div(1.0 + z, 1.0 - z, "strip map at z = 1")); },
        [](Complex z) {
            return guarded_div(Complex{2.0, 0.0}, 1.0 - z * z, "strip derivative at z = +-1");
        },
        [](Complex w) { return std::tanh(0.5 * w); });
}

DomainMap domain_from_label(std::string_view label) {
    if (label == "half-plane")
        return half_plane();
    if (label == "strip")
        return strip();
    constexpr std::string_view prefix = "disk:";
    if (label.substr(0, prefix.size()) == prefix) {
        std::string_view rest = label.substr(prefix.size());
        std::vector<double> parts;
        while (true) {
            const auto comma = rest.find(',');
            const std::string_view piece = rest.substr(0, comma);
            double v = 0.0;
            auto [ptr, ec] = std::from_chars(piece.data(), piece.data() + piece.size(), v);
            if (ec != std::errc() || ptr != piece.data() + piece.size() || piece.empty())
                throw ContractViolation("malformed disk label: " + std::string(label));
            parts.push_back(v);
            if (comma == std::string_view::npos)
                break;
            rest = rest.substr(comma + 1);
        }
        if (parts.size() != 3)
            throw ContractViolation("disk label needs <re>,<im>,<r>: " + std::string(label));
        return disk(Complex{parts[0], parts[1]}, parts[2]);
    }
    throw ContractViolation("unknown domain label: " + std::string(label));
}

}  // namespace schur
