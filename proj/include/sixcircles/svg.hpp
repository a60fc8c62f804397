#pragma once

#include <span>
#include <string>
#include <vector>

#include "sixcircles/chain.hpp"
#include "sixcircles/geometry.hpp"

namespace sixcircles {

struct SvgOptions {
  double width = 800.0;   // pixels; height follows the aspect ratio
  double margin = 20.0;
  bool label_centers = true;
  bool show_tangency_points = true;
};

/// SVG 1.1 drawing of a polygon outline and a chain of circles, with center
/// labels by step index. Byte-identical for identical input.
std::string render_svg(std::span<const Point> outline, std::span<const ChainStep> steps,
                       const SvgOptions& options = {});

}  // namespace sixcircles
