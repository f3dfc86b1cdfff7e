#include "schur/svg_plot.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <vector>

namespace schur::plot {

namespace {

constexpr double kSize = 640.0;
constexpr double kMargin = 70.0;

std::string fixed(double v) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.3f", v);
    return buf;
}

std::string tick_label(double v) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.6g", std::abs(v) < 1e-14 ? 0.0 : v);
    return buf;
}

// 1, 2 or 5 times a power of ten, close to span / target.
double nice_step(double span, int target) {
    const double raw = span / target;
    const double mag = std::pow(10.0, std::floor(std::log10(raw)));
    const double frac = raw / mag;
    const double nice = frac < 1.5 ? 1.0 : frac < 3.5 ? 2.0 : frac < 7.5 ? 5.0 : 10.0;
    return nice * mag;
}

std::vector<double> ticks(double lo, double hi) {
    const double step = nice_step(hi - lo, 5);
    std::vector<double> out;
    for (double t = std::ceil(lo / step) * step; t <= hi + 1e-9 * step; t += step)
        out.push_back(t);
    return out;
}

}  // namespace

std::string render_region_svg(std::span<const Complex> boundary, std::optional<Complex> witness) {
    double xmin = boundary.front().real(), xmax = xmin;
    double ymin = boundary.front().imag(), ymax = ymin;
    auto extend = [&](Complex p) {
        xmin = std::min(xmin, p.real());
        xmax = std::max(xmax, p.real());
        ymin = std::min(ymin, p.imag());
        ymax = std::max(ymax, p.imag());
    };
    for (Complex p : boundary)
        extend(p);
    if (witness)
        extend(*witness);

    // Equal scaling on both axes, 5% padding, centred in the frame.
    double span = std::max(xmax - xmin, ymax - ymin);
    if (!(span > 0.0))
        span = 1.0;
    const double cx = 0.5 * (xmin + xmax);
    const double cy = 0.5 * (ymin + ymax);
    const double half = 0.55 * span;
    const double lo_x = cx - half, hi_x = cx + half;
    const double lo_y = cy - half, hi_y = cy + half;
    const double scale = (kSize - 2.0 * kMargin) / (2.0 * half);
    auto px = [&](double x) { return kMargin + (x - lo_x) * scale; };
    auto py = [&](double y) { return kSize - kMargin - (y - lo_y) * scale; };

    std::ostringstream os;
    os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
       << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kSize << "\" height=\"" << kSize
       << "\" viewBox=\"0 0 " << kSize << ' ' << kSize << "\">\n"
       << "<rect x=\"0\" y=\"0\" width=\"" << kSize << "\" height=\"" << kSize
       << "\" fill=\"white\"/>\n";

    const double left = kMargin, right = kSize - kMargin;
    const double top = kMargin, bottom = kSize - kMargin;
    os << "<g id=\"axes\" stroke=\"black\" stroke-width=\"1\" fill=\"none\">\n"
       << "<line x1=\"" << fixed(left) << "\" y1=\"" << fixed(bottom) << "\" x2=\"" << fixed(right)
       << "\" y2=\"" << fixed(bottom) << "\"/>\n"
       << "<line x1=\"" << fixed(left) << "\" y1=\"" << fixed(top) << "\" x2=\"" << fixed(left)
       << "\" y2=\"" << fixed(bottom) << "\"/>\n";
    for (double t : ticks(lo_x, hi_x))
        os << "<line class=\"tick\" x1=\"" << fixed(px(t)) << "\" y1=\"" << fixed(bottom)
           << "\" x2=\"" << fixed(px(t)) << "\" y2=\"" << fixed(bottom + 6.0) << "\"/>\n";
    for (double t : ticks(lo_y, hi_y))
        os << "<line class=\"tick\" x1=\"" << fixed(left - 6.0) << "\" y1=\"" << fixed(py(t))
           << "\" x2=\"" << fixed(left) << "\" y2=\"" << fixed(py(t)) << "\"/>\n";
    os << "</g>\n<g id=\"tick-labels\" font-family=\"sans-serif\" font-size=\"11\">\n";
    for (double t : ticks(lo_x, hi_x))
        os << "<text x=\"" << fixed(px(t)) << "\" y=\"" << fixed(bottom + 20.0)
           << "\" text-anchor=\"middle\">" << tick_label(t) << "</text>\n";
    for (double t : ticks(lo_y, hi_y))
        os << "<text x=\"" << fixed(left - 10.0) << "\" y=\"" << fixed(py(t) + 4.0)
           << "\" text-anchor=\"end\">" << tick_label(t) << "</text>\n";
    os << "<text x=\"" << fixed(0.5 * (left + right)) << "\" y=\"" << fixed(kSize - 20.0)
       << "\" text-anchor=\"middle\">Re</text>\n"
       << "<text x=\"20\" y=\"" << fixed(0.5 * (top + bottom))
       << "\" text-anchor=\"middle\">Im</text>\n</g>\n";

    os << "<polyline id=\"boundary\" fill=\"#dbe8f6\" stroke=\"#1f4e8c\" stroke-width=\"1.5\" "
          "points=\"";
    for (std::size_t k = 0; k <= boundary.size(); ++k) {
        const Complex p = boundary[k % boundary.size()];
        if (k > 0)
            os << ' ';
        os << fixed(px(p.real())) << ',' << fixed(py(p.imag()));
    }
    os << "\"/>\n";
    if (witness)
        os << "<circle id=\"interior-witness\" cx=\"" << fixed(px(witness->real())) << "\" cy=\""
           << fixed(py(witness->imag())) << "\" r=\"4\" fill=\"#c0392b\"/>\n";
    os << "</svg>\n";
    return os.str();
}

}  // namespace schur::plot
