#include "sixcircles/svg.hpp"

#include <algorithm>
#include <cstdio>
#include <limits>
#include <sstream>

namespace sixcircles {
namespace {

std::string fixed6(double value) {
  char buffer[64];
  std::snprintf(buffer, sizeof buffer, "%.6f", value);
  // Avoid "-0.000000" so output does not depend on the sign of zero.
  if (std::string_view(buffer) == "-0.000000") return "0.000000";
  return buffer;
}

struct Frame {
  double min_x, max_y, scale, margin;
  double x(double world) const { return margin + (world - min_x) * scale; }
  double y(double world) const { return margin + (max_y - world) * scale; }
};

}  // namespace

std::string render_svg(std::span<const Point> outline, std::span<const ChainStep> steps,
                       const SvgOptions& options) {
  double min_x = std::numeric_limits<double>::infinity();
  double min_y = min_x;
  double max_x = -min_x;
  double max_y = -min_x;
  const auto include = [&](double x, double y, double pad) {
    min_x = std::min(min_x, x - pad);
    max_x = std::max(max_x, x + pad);
    min_y = std::min(min_y, y - pad);
    max_y = std::max(max_y, y + pad);
  };
  for (const Point& p : outline) include(p.x, p.y, 0.0);
  for (const ChainStep& step : steps) {
    include(step.circle.center.x, step.circle.center.y, step.circle.radius);
  }
  if (!(max_x > min_x)) max_x = min_x + 1.0;
  if (!(max_y > min_y)) max_y = min_y + 1.0;

  const double drawable = options.width - 2.0 * options.margin;
  const Frame frame{min_x, max_y, drawable / (max_x - min_x), options.margin};
  const double height = 2.0 * options.margin + (max_y - min_y) * frame.scale;
  const double stroke = 1.0;
  const double font = std::max(8.0, options.width / 60.0);

  std::ostringstream svg;
  svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\""
      << fixed6(options.width) << "\" height=\"" << fixed6(height) << "\" viewBox=\"0 0 "
      << fixed6(options.width) << ' ' << fixed6(height) << "\">\n";

  svg << "  <polygon fill=\"none\" stroke=\"black\" stroke-width=\"" << fixed6(stroke)
      << "\" points=\"";
  for (std::size_t i = 0; i < outline.size(); ++i) {
    if (i) svg << ' ';
    svg << fixed6(frame.x(outline[i].x)) << ',' << fixed6(frame.y(outline[i].y));
  }
  svg << "\"/>\n";

  for (const ChainStep& step : steps) {
    const AngleCircle& c = step.circle;
    svg << "  <circle cx=\"" << fixed6(frame.x(c.center.x)) << "\" cy=\""
        << fixed6(frame.y(c.center.y)) << "\" r=\"" << fixed6(c.radius * frame.scale)
        << "\" fill=\"none\" stroke=\"steelblue\" stroke-width=\"" << fixed6(stroke)
        << "\"/>\n";
    if (options.show_tangency_points) {
      for (const Point& t : c.tangency_points) {
        svg << "  <circle cx=\"" << fixed6(frame.x(t.x)) << "\" cy=\"" << fixed6(frame.y(t.y))
            << "\" r=\"" << fixed6(2.0 * stroke) << "\" fill=\"firebrick\"/>\n";
      }
    }
    if (options.label_centers) {
      svg << "  <text x=\"" << fixed6(frame.x(c.center.x)) << "\" y=\""
          << fixed6(frame.y(c.center.y)) << "\" font-size=\"" << fixed6(font)
          << "\" text-anchor=\"middle\">" << step.index << "</text>\n";
    }
  }
  svg << "</svg>\n";
  return svg.str();
}

}  // namespace sixcircles
