#ifndef SCHUR_SVG_PLOT_HPP
#define SCHUR_SVG_PLOT_HPP

#include <optional>
#include <span>
#include <string>

#include "schur/types.hpp"

namespace schur::plot {

// Standalone SVG: the boundary as one closed polyline (first vertex
// repeated), a marker at `witness` when given, and framed axes with numeric
// ticks.  Output depends only on the arguments.
std::string render_region_svg(std::span<const Complex> boundary, std::optional<Complex> witness);

}  // namespace schur::plot

#endif  // SCHUR_SVG_PLOT_HPP
