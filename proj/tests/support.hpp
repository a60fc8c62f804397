#pragma once

#include <cstdint>
#include <random>

#include "sixcircles/triangle.hpp"

namespace sixcircles::testing {

inline double uniform(std::mt19937_64& engine, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(engine);
}

/// Sides built from three positive tangent lengths, so every draw is a
/// valid triangle. The spread in [0.05, 1] gives plenty of obtuse and thin
/// shapes.
inline Triangle random_triangle(std::mt19937_64& engine) {
  const double t1 = uniform(engine, 0.05, 1.0);
  const double t2 = uniform(engine, 0.05, 1.0);
  const double t3 = uniform(engine, 0.05, 1.0);
  return Triangle(t2 + t3, t1 + t3, t1 + t2);
}

}  // namespace sixcircles::testing
