#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "sixcircles/angle.hpp"
#include "sixcircles/chain.hpp"
#include "sixcircles/geometry.hpp"

namespace sixcircles {

/// Strictly convex polygon with counterclockwise vertices. Edge i joins
/// vertex i to vertex i + 1 (mod n).
class ConvexPolygon {
 public:
  /// Throws Error(NotConvex) for fewer than three vertices, clockwise order,
  /// or any non-positive turn.
  explicit ConvexPolygon(std::vector<Point> vertices);

  /// Parallelogram with sides `base` (along the x-axis) and `side`, and
  /// interior angle `angle` (radians) at the origin.
  static ConvexPolygon parallelogram(double base, double side, double angle);
  static ConvexPolygon regular(std::size_t n, double side);

  std::size_t size() const { return vertices_.size(); }
  const std::vector<Point>& vertices() const { return vertices_; }
  const std::vector<double>& edge_lengths() const { return edge_lengths_; }
  const std::vector<double>& half_angles() const { return half_angles_; }
  const std::vector<double>& tan_half_angles() const { return tan_half_; }
  /// sqrt(tan(alpha_i) tan(alpha_{i+1})) for edge i.
  const std::vector<double>& edge_couplings() const { return couplings_; }

  std::size_t next(std::size_t i) const { return (i + 1) % size(); }
  std::size_t prev(std::size_t i) const { return (i + size() - 1) % size(); }

  VertexAngle vertex_angle(std::size_t i) const;

 private:
  std::vector<Point> vertices_;
  std::vector<double> edge_lengths_;
  std::vector<double> half_angles_;
  std::vector<double> tan_half_;
  std::vector<double> couplings_;
};

AngleCircle circle_from_u(const ConvexPolygon& poly, std::size_t vertex, double u);

/// The triangle's u-recursion applied to the edge from `vertex` to the next
/// vertex.
TangentRoot polygon_step(const ConvexPolygon& poly, std::size_t vertex, double u,
                         Choice choice);

struct PolygonChainRecord {
  ConvexPolygon polygon;
  std::vector<ChainStep> steps;
  Termination termination = Termination::MaxSteps;
  std::optional<Periodicity> periodicity;
};

/// Cycles are searched with periods that are multiples of the vertex count.
PolygonChainRecord polygon_chain(const ConvexPolygon& poly, const AngleCircle& initial,
                                 const ChoicePolicy& policy,
                                 std::size_t max_steps = kDefaultMaxSteps,
                                 double tol = kCycleTolerance);

/// Mean per-step log growth of the separation between the smaller-choice
/// orbits of u0 and u0 + delta0, renormalizing the separation back to
/// |delta0| after every step. Throws Error(OrbitTerminated) if either orbit
/// cannot be continued for `steps` steps.
double divergence_rate(const ConvexPolygon& poly, std::size_t start_vertex, double u0,
                       double delta0, std::size_t steps);

}  // namespace sixcircles
