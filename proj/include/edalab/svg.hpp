#pragma once

#include <ostream>
#include <span>
#include <string>

namespace edalab {

/// Renders a standalone SVG line plot with one polyline, axis lines, tick
/// labels at the data extremes, and the given axis labels. Output bytes are
/// a pure function of the inputs.
void write_line_plot_svg(std::ostream& out, std::span<const double> xs,
                         std::span<const double> ys, const std::string& x_label,
                         const std::string& y_label);

}  // namespace edalab
