#pragma once

#include <cmath>

namespace sixcircles {

struct Point {
  double x = 0.0;
  double y = 0.0;

  friend Point operator+(Point a, Point b) { return {a.x + b.x, a.y + b.y}; }
  friend Point operator-(Point a, Point b) { return {a.x - b.x, a.y - b.y}; }
  friend Point operator*(double s, Point a) { return {s * a.x, s * a.y}; }
  friend bool operator==(Point, Point) = default;
};

inline double dot(Point a, Point b) { return a.x * b.x + a.y * b.y; }
inline double cross(Point a, Point b) { return a.x * b.y - a.y * b.x; }
inline double norm(Point a) { return std::hypot(a.x, a.y); }
inline double distance(Point a, Point b) { return norm(a - b); }
inline Point normalized(Point a) { return (1.0 / norm(a)) * a; }

/// Distance from `p` to the infinite line through `a` and `b`.
inline double distance_to_line(Point p, Point a, Point b) {
  return std::abs(cross(b - a, p - a)) / distance(a, b);
}

}  // namespace sixcircles
