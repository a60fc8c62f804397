#include "sixcircles/polygon.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "sixcircles/error.hpp"

namespace sixcircles {

ConvexPolygon::ConvexPolygon(std::vector<Point> vertices) : vertices_(std::move(vertices)) {
  const std::size_t n = vertices_.size();
  if (n < 3) throw Error(ErrorCode::NotConvex, "a polygon needs at least three vertices");
  for (std::size_t i = 0; i < n; ++i) {
    const Point in = vertices_[i] - vertices_[prev(i)];
    const Point out = vertices_[next(i)] - vertices_[i];
    if (!(cross(in, out) > 0.0)) {
      std::ostringstream msg;
      msg << "vertex " << i << " is not a strictly convex counterclockwise turn";
      throw Error(ErrorCode::NotConvex, msg.str());
    }
  }

  edge_lengths_.resize(n);
  half_angles_.resize(n);
  tan_half_.resize(n);
  couplings_.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    edge_lengths_[i] = distance(vertices_[i], vertices_[next(i)]);
    const Point to_next = vertices_[next(i)] - vertices_[i];
    const Point to_prev = vertices_[prev(i)] - vertices_[i];
    // tan(theta / 2) = sin(theta) / (1 + cos(theta))
    tan_half_[i] = std::abs(cross(to_next, to_prev)) /
                   (norm(to_next) * norm(to_prev) + dot(to_next, to_prev));
    half_angles_[i] = std::atan(tan_half_[i]);
  }
  for (std::size_t i = 0; i < n; ++i) {
    couplings_[i] = std::sqrt(tan_half_[i] * tan_half_[next(i)]);
  }
}

ConvexPolygon ConvexPolygon::parallelogram(double base, double side, double angle) {
  if (!(base > 0.0 && side > 0.0 && angle > 0.0 && angle < std::numbers::pi)) {
    throw Error(ErrorCode::NotConvex, "parallelogram needs positive sides and an angle in (0, pi)");
  }
  const Point lean{side * std::cos(angle), side * std::sin(angle)};
  return ConvexPolygon({{0.0, 0.0}, {base, 0.0}, Point{base, 0.0} + lean, lean});
}

ConvexPolygon ConvexPolygon::regular(std::size_t n, double side) {
  const double pi = std::numbers::pi;
  const double circumradius = side / (2.0 * std::sin(pi / static_cast<double>(n)));
  const double start = -pi / 2.0 - pi / static_cast<double>(n);
  std::vector<Point> vertices;
  for (std::size_t k = 0; k < n; ++k) {
    const double theta = start + 2.0 * pi * static_cast<double>(k) / static_cast<double>(n);
    vertices.push_back({circumradius * std::cos(theta), circumradius * std::sin(theta)});
  }
  return ConvexPolygon(std::move(vertices));
}

VertexAngle ConvexPolygon::vertex_angle(std::size_t i) const {
  VertexAngle angle;
  angle.index = i;
  angle.apex = vertices_[i];
  angle.toward_next = normalized(vertices_[next(i)] - vertices_[i]);
  angle.toward_prev = normalized(vertices_[prev(i)] - vertices_[i]);
  angle.next_side = edge_lengths_[i];
  angle.prev_side = edge_lengths_[prev(i)];
  angle.tan_half = tan_half_[i];
  return angle;
}

AngleCircle circle_from_u(const ConvexPolygon& poly, std::size_t vertex, double u) {
  return inscribe(poly.vertex_angle(vertex), u * u, u);
}

TangentRoot polygon_step(const ConvexPolygon& poly, std::size_t vertex, double u,
                         Choice choice) {
  return tangent_root(u, poly.edge_lengths()[vertex], poly.edge_couplings()[vertex], choice);
}

PolygonChainRecord polygon_chain(const ConvexPolygon& poly, const AngleCircle& initial,
                                 const ChoicePolicy& policy, std::size_t max_steps,
                                 double tol) {
  PolygonChainRecord record{poly, {}, Termination::MaxSteps, std::nullopt};
  record.steps.push_back({1, initial, std::nullopt, std::nullopt});
  if (initial.degenerate()) {
    record.termination = Termination::DegenerateCircle;
    return record;
  }

  ChoiceSource choices(policy);
  for (std::size_t n = 0; n < max_steps; ++n) {
    const AngleCircle& current = record.steps.back().circle;
    const Choice choice = choices.next();
    TangentRoot root;
    try {
      root = polygon_step(poly, current.vertex, current.u, choice);
    } catch (const Error&) {
      record.termination = Termination::NotConstructible;
      return record;
    }
    const AngleCircle next = circle_from_u(poly, poly.next(current.vertex), root.u_next);
    record.steps.push_back({record.steps.size() + 1, next, choice, root.sign_case});
    if (next.degenerate()) {
      record.termination = Termination::DegenerateCircle;
      return record;
    }
    if (auto found = match_last(record.steps, poly.size(), tol)) {
      record.termination = Termination::CycleDetected;
      record.periodicity = found;
      return record;
    }
  }
  return record;
}

double divergence_rate(const ConvexPolygon& poly, std::size_t start_vertex, double u0,
                       double delta0, std::size_t steps) {
  if (steps == 0 || delta0 == 0.0) {
    throw Error(ErrorCode::InvalidParameters, "need at least one step and a nonzero offset");
  }
  const double gap = std::abs(delta0);
  double u = u0;
  double v = u0 + delta0;
  double log_sum = 0.0;
  std::size_t vertex = start_vertex;
  for (std::size_t k = 0; k < steps; ++k) {
    double next_u = 0.0;
    double next_v = 0.0;
    try {
      next_u = polygon_step(poly, vertex, u, Choice::Smaller).u_next;
      next_v = polygon_step(poly, vertex, v, Choice::Smaller).u_next;
    } catch (const Error& e) {
      std::ostringstream msg;
      msg << "orbit stopped after " << k << " steps (" << e.what() << ")";
      throw Error(ErrorCode::OrbitTerminated, msg.str());
    }
    const double separation = next_v - next_u;
    if (separation == 0.0) return -std::numeric_limits<double>::infinity();
    log_sum += std::log(std::abs(separation) / gap);
    u = next_u;
    v = next_u + std::copysign(gap, separation);
    if (v < 0.0) v = next_u + gap;
    vertex = poly.next(vertex);
  }
  return log_sum / static_cast<double>(steps);
}

}  // namespace sixcircles
