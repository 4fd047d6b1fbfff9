#include "edalab/svg.hpp"

#include <algorithm>
#include <stdexcept>

#include "edalab/csv.hpp"

namespace edalab {

namespace {

constexpr double kWidth = 800.0;
constexpr double kHeight = 500.0;
constexpr double kMarginLeft = 70.0;
constexpr double kMarginRight = 20.0;
constexpr double kMarginTop = 20.0;
constexpr double kMarginBottom = 50.0;

std::string esc(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      default: out += c;
    }
  }
  return out;
}

}  // namespace

void write_line_plot_svg(std::ostream& out, std::span<const double> xs,
                         std::span<const double> ys, const std::string& x_label,
                         const std::string& y_label) {
  if (xs.size() != ys.size() || xs.empty())
    throw std::runtime_error("plot: need matching non-empty x/y columns");
  double xmin = xs[0], xmax = xs[0], ymin = ys[0], ymax = ys[0];
  for (std::size_t i = 0; i < xs.size(); ++i) {
    xmin = std::min(xmin, xs[i]);
    xmax = std::max(xmax, xs[i]);
    ymin = std::min(ymin, ys[i]);
    ymax = std::max(ymax, ys[i]);
  }
  const double xspan = xmax > xmin ? xmax - xmin : 1.0;
  const double yspan = ymax > ymin ? ymax - ymin : 1.0;
  const double plot_w = kWidth - kMarginLeft - kMarginRight;
  const double plot_h = kHeight - kMarginTop - kMarginBottom;
  const auto px = [&](double x) {
    return kMarginLeft + (x - xmin) / xspan * plot_w;
  };
  const auto py = [&](double y) {
    return kMarginTop + plot_h - (y - ymin) / yspan * plot_h;
  };

  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"800\" "
         "height=\"500\" viewBox=\"0 0 800 500\">\n";
  out << "<rect width=\"800\" height=\"500\" fill=\"white\"/>\n";
  // axes
  out << "<line x1=\"" << format_double(kMarginLeft) << "\" y1=\""
      << format_double(kMarginTop) << "\" x2=\"" << format_double(kMarginLeft)
      << "\" y2=\"" << format_double(kMarginTop + plot_h)
      << "\" stroke=\"black\"/>\n";
  out << "<line x1=\"" << format_double(kMarginLeft) << "\" y1=\""
      << format_double(kMarginTop + plot_h) << "\" x2=\""
      << format_double(kMarginLeft + plot_w) << "\" y2=\""
      << format_double(kMarginTop + plot_h) << "\" stroke=\"black\"/>\n";
  // extreme tick labels
  out << "<text x=\"" << format_double(kMarginLeft) << "\" y=\""
      << format_double(kHeight - 28.0)
      << "\" font-size=\"12\" text-anchor=\"middle\">" << format_double(xmin)
      << "</text>\n";
  out << "<text x=\"" << format_double(kMarginLeft + plot_w) << "\" y=\""
      << format_double(kHeight - 28.0)
      << "\" font-size=\"12\" text-anchor=\"middle\">" << format_double(xmax)
      << "</text>\n";
  out << "<text x=\"" << format_double(kMarginLeft - 6.0) << "\" y=\""
      << format_double(kMarginTop + plot_h)
      << "\" font-size=\"12\" text-anchor=\"end\">" << format_double(ymin)
      << "</text>\n";
  out << "<text x=\"" << format_double(kMarginLeft - 6.0) << "\" y=\""
      << format_double(kMarginTop + 10.0)
      << "\" font-size=\"12\" text-anchor=\"end\">" << format_double(ymax)
      << "</text>\n";
  // axis labels: the column names
  out << "<text x=\"" << format_double(kMarginLeft + plot_w / 2.0) << "\" y=\""
      << format_double(kHeight - 8.0)
      << "\" font-size=\"14\" text-anchor=\"middle\">" << esc(x_label)
      << "</text>\n";
  out << "<text x=\"14\" y=\"" << format_double(kMarginTop + plot_h / 2.0)
      << "\" font-size=\"14\" text-anchor=\"middle\" transform=\"rotate(-90 14 "
      << format_double(kMarginTop + plot_h / 2.0) << ")\">" << esc(y_label)
      << "</text>\n";
  out << "<polyline fill=\"none\" stroke=\"steelblue\" stroke-width=\"1.5\" "
         "points=\"";
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out << ' ';
    out << format_double(px(xs[i])) << ',' << format_double(py(ys[i]));
  }
  out << "\"/>\n";
  out << "</svg>\n";
}

}  // namespace edalab
