#include "sixcircles/chain.hpp"

#include <cmath>
#include <sstream>

#include "sixcircles/error.hpp"

namespace sixcircles {
namespace {

// Rounding slack for the boundary cases of the root formulas, relative to
// the side length.
constexpr double kBoundarySlack = 1e-12;

}  // namespace

AngleCircle inscribe(const VertexAngle& angle, double tangent_length, double u) {
  AngleCircle circle;
  circle.vertex = angle.index;
  circle.tangent_length = tangent_length;
  circle.u = u;
  circle.radius = tangent_length * angle.tan_half;
  const Point bisector = normalized(angle.toward_prev + angle.toward_next);
  // |apex - center| = t / cos(alpha)
  const double apex_distance =
      tangent_length * std::sqrt(1.0 + angle.tan_half * angle.tan_half);
  circle.center = angle.apex + apex_distance * bisector;
  circle.tangency_points = {angle.apex + tangent_length * angle.toward_prev,
                            angle.apex + tangent_length * angle.toward_next};
  circle.tangency = {
      tangent_length <= angle.prev_side ? Tangency::OnSide : Tangency::OnExtension,
      tangent_length <= angle.next_side ? Tangency::OnSide : Tangency::OnExtension};
  return circle;
}

AngleCircle circle_from_radius(const Triangle& tri, std::size_t vertex, double r) {
  const VertexAngle angle = tri.vertex_angle(vertex);
  const double t = r / angle.tan_half;
  AngleCircle circle = inscribe(angle, t, std::sqrt(t));
  circle.radius = r;
  return circle;
}

AngleCircle circle_from_u(const Triangle& tri, std::size_t vertex, double u) {
  return inscribe(tri.vertex_angle(vertex), u * u, u);
}

double tangent_segment_length(double r1, double r2) { return 2.0 * std::sqrt(r1 * r2); }

TangentRoot tangent_root(double u, double side, double coupling, Choice choice) {
  double radicand = side - (1.0 - coupling * coupling) * u * u;
  if (radicand < 0.0) {
    if (radicand < -kBoundarySlack * side) {
      std::ostringstream msg;
      msg << "no circle in the next angle is tangent to u=" << u << " (radicand " << radicand
          << ")";
      throw Error(ErrorCode::RadicandNegative, msg.str());
    }
    radicand = 0.0;
  }
  const double root = std::sqrt(radicand);

  TangentRoot result;
  if (choice == Choice::Larger) {
    // Largest positive root of either relation; it always solves the minus one.
    result.u_next = coupling * u + root;
    result.sign_case = SignCase::MinusOnExtension;
  } else if (u * u <= side) {
    result.u_next = -coupling * u + root;
    result.sign_case = SignCase::PlusOnSide;
  } else {
    result.u_next = coupling * u - root;
    result.sign_case = SignCase::MinusOnExtension;
  }

  if (result.u_next < 0.0) {
    if (result.u_next < -kBoundarySlack * std::sqrt(side)) {
      std::ostringstream msg;
      msg << "selected root " << result.u_next << " is negative";
      throw Error(ErrorCode::NegativeRoot, msg.str());
    }
    result.u_next = 0.0;
  }
  return result;
}

TangentRoot next_u(const Triangle& tri, std::size_t from_vertex, double u, Choice choice) {
  const std::size_t k = Triangle::side_after(from_vertex);
  return tangent_root(u, tri.side(k), tri.couplings()[k], choice);
}

Constructibility constructibility_check(const Triangle& tri, const AngleCircle& circle) {
  if (circle.touches_a_side()) return Constructibility::Ok;

  const Point a = tri.vertices()[Triangle::next(circle.vertex)];
  const Point b = tri.vertices()[Triangle::prev(circle.vertex)];
  const double reach = circle.radius * (1.0 + kBoundarySlack);
  if (distance_to_line(circle.center, a, b) > reach) return Constructibility::NotConstructible;

  const Point ab = b - a;
  const double foot = dot(circle.center - a, ab) / dot(ab, ab);
  if (foot >= 0.0 && foot <= 1.0) return Constructibility::NextTouchesOppositeSide;
  if (distance(circle.center, a) <= reach || distance(circle.center, b) <= reach) {
    return Constructibility::NextTouchesOppositeSide;
  }
  return Constructibility::NotConstructible;
}

Transition step(const Triangle& tri, const AngleCircle& current, Choice choice) {
  if (current.degenerate()) {
    throw Error(ErrorCode::DegenerateCircle, "cannot continue a chain from a point circle");
  }
  if (constructibility_check(tri, current) == Constructibility::NotConstructible) {
    throw Error(ErrorCode::NotConstructible,
                "circle misses the opposite side; no next circle exists");
  }
  const TangentRoot root = next_u(tri, current.vertex, current.u, choice);
  return {circle_from_u(tri, Triangle::next(current.vertex), root.u_next), root.sign_case};
}

ChoiceSource::ChoiceSource(ChoicePolicy policy) : policy_(std::move(policy)) {
  if (const auto* random = std::get_if<RandomChoice>(&policy_)) engine_.seed(random->seed);
}

Choice ChoiceSource::next() {
  struct Visitor {
    ChoiceSource& self;
    Choice operator()(const AlwaysSmaller&) const { return Choice::Smaller; }
    Choice operator()(const AlwaysLarger&) const { return Choice::Larger; }
    Choice operator()(const RandomChoice&) const {
      return (self.engine_() >> 63) != 0 ? Choice::Larger : Choice::Smaller;
    }
    Choice operator()(const Scripted& script) const {
      if (self.position_ < script.choices.size()) return script.choices[self.position_];
      return Choice::Smaller;
    }
  };
  const Choice choice = std::visit(Visitor{*this}, policy_);
  ++position_;
  return choice;
}

std::optional<Periodicity> match_last(std::span<const ChainStep> steps,
                                      std::size_t vertex_count, double tol) {
  if (steps.size() < 2 || vertex_count == 0) return std::nullopt;
  const std::size_t last = steps.size() - 1;
  const AngleCircle& current = steps[last].circle;
  for (std::size_t back = vertex_count; back <= last; back += vertex_count) {
    const AngleCircle& earlier = steps[last - back].circle;
    if (earlier.vertex == current.vertex && std::abs(earlier.u - current.u) <= tol) {
      return Periodicity{last - back, back};
    }
  }
  return std::nullopt;
}

std::optional<Periodicity> detect_periodicity(std::span<const ChainStep> steps,
                                              std::size_t vertex_count, double tol) {
  for (std::size_t n = 2; n <= steps.size(); ++n) {
    if (auto found = match_last(steps.first(n), vertex_count, tol)) return found;
  }
  return std::nullopt;
}

ChainRecord run_chain(const Triangle& tri, const AngleCircle& initial,
                      const ChoicePolicy& policy, std::size_t max_steps, double tol) {
  ChainRecord record{tri, {}, Termination::MaxSteps, std::nullopt};
  record.steps.push_back({1, initial, std::nullopt, std::nullopt});
  if (initial.degenerate()) {
    record.termination = Termination::DegenerateCircle;
    return record;
  }

  ChoiceSource choices(policy);
  for (std::size_t n = 0; n < max_steps; ++n) {
    const Choice choice = choices.next();
    Transition next;
    try {
      next = step(tri, record.steps.back().circle, choice);
    } catch (const Error& e) {
      if (e.code() == ErrorCode::RadicandNegative || e.code() == ErrorCode::NegativeRoot ||
          e.code() == ErrorCode::NotConstructible) {
        record.termination = Termination::NotConstructible;
        return record;
      }
      throw;
    }
    record.steps.push_back({record.steps.size() + 1, next.circle, choice, next.sign_case});
    if (next.circle.degenerate()) {
      record.termination = Termination::DegenerateCircle;
      return record;
    }
    if (auto found = match_last(record.steps, 3, tol)) {
      record.termination = Termination::CycleDetected;
      record.periodicity = found;
      return record;
    }
  }
  return record;
}

double tangency_equation_residual(double t_from, double r_from, double t_to, double r_to,
                                  double side, SignCase sign_case) {
  const double sign = sign_case == SignCase::PlusOnSide ? 1.0 : -1.0;
  return t_from + sign * tangent_segment_length(r_from, r_to) + t_to - side;
}

}  // namespace sixcircles
