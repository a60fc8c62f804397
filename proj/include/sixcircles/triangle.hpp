#pragma once

#include <array>
#include <cstddef>

#include "sixcircles/angle.hpp"
#include "sixcircles/geometry.hpp"

namespace sixcircles {

/// A triangle given by its side lengths. Side i is opposite vertex i; vertex
/// indices are 0-based (0, 1, 2 correspond to P1, P2, P3).
///
/// Every derived quantity is computed once at construction. The canonical
/// embedding puts P1 at the origin, P2 at (a3, 0) and P3 in the upper
/// half-plane, so vertices run counterclockwise.
class Triangle {
 public:
  /// Throws Error(NonPositiveSide) or Error(TriangleInequalityViolated).
  Triangle(double a1, double a2, double a3);

  static Triangle from_sides(double a1, double a2, double a3) { return {a1, a2, a3}; }

  const std::array<double, 3>& sides() const { return sides_; }
  double side(std::size_t i) const { return sides_[i]; }
  double semiperimeter() const { return p_; }

  /// Half of each interior angle, in radians.
  const std::array<double, 3>& half_angles() const { return half_angles_; }
  const std::array<double, 3>& tan_half_angles() const { return tan_half_; }

  /// beta_i = arcsin(sqrt(a_i / p)).
  const std::array<double, 3>& betas() const { return betas_; }

  /// e_k = sqrt(tan(alpha_i) tan(alpha_j)) for the two vertices on side k.
  const std::array<double, 3>& couplings() const { return couplings_; }

  /// Incircle tangent length from each vertex, p - a_i.
  const std::array<double, 3>& tangent_lengths() const { return tangent_lengths_; }

  const std::array<Point, 3>& vertices() const { return vertices_; }

  static constexpr std::size_t next(std::size_t i) { return (i + 1) % 3; }
  static constexpr std::size_t prev(std::size_t i) { return (i + 2) % 3; }
  /// Index of the side joining vertex i to vertex next(i).
  static constexpr std::size_t side_after(std::size_t i) { return (i + 2) % 3; }

  VertexAngle vertex_angle(std::size_t i) const;

 private:
  std::array<double, 3> sides_{};
  double p_ = 0.0;
  std::array<double, 3> tangent_lengths_{};
  std::array<double, 3> tan_half_{};
  std::array<double, 3> half_angles_{};
  std::array<double, 3> betas_{};
  std::array<double, 3> couplings_{};
  std::array<Point, 3> vertices_{};
};

/// 1 - tan(alpha_i) tan(alpha_j) - a_k / p for the side k between vertices
/// i and j. Vanishes for every valid triangle.
double lemma_tri_residual(const Triangle& tri, std::size_t k);

/// (beta_i + beta_j) - beta_k with beta_k the largest. Always positive.
double beta_inequality_margin(const Triangle& tri);

}  // namespace sixcircles
