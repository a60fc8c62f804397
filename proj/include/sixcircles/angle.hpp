#pragma once

#include <cstddef>

#include "sixcircles/geometry.hpp"

namespace sixcircles {

/// The angle at one vertex of a convex polygon, as seen by a circle
/// inscribed in it.
struct VertexAngle {
  std::size_t index = 0;
  Point apex;
  Point toward_prev;  // unit vector along the side to the previous vertex
  Point toward_next;  // unit vector along the side to the next vertex
  double prev_side = 0.0;
  double next_side = 0.0;
  double tan_half = 0.0;  // tangent of half the interior angle
};

}  // namespace sixcircles
