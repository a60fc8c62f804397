#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <variant>
#include <vector>

#include "sixcircles/angle.hpp"
#include "sixcircles/geometry.hpp"
#include "sixcircles/triangle.hpp"

namespace sixcircles {

enum class Tangency { OnSide, OnExtension };

/// Which of the two circles tangent to the previous one is taken.
enum class Choice { Smaller, Larger };

/// Variant of the tangency relation t1 +/- 2 sqrt(r1 r2) + t2 = s satisfied
/// by a step. For the smaller circle this coincides with whether the
/// previous circle touches the shared side itself (plus) or its extension
/// (minus). The larger circle always satisfies the minus variant.
enum class SignCase { PlusOnSide, MinusOnExtension };

/// A circle inscribed in the angle at one vertex.
struct AngleCircle {
  std::size_t vertex = 0;
  double radius = 0.0;
  double tangent_length = 0.0;  // r cot(alpha) == u^2
  double u = 0.0;
  Point center;
  /// Tangency points on the lines toward the previous and next vertex.
  std::array<Point, 2> tangency_points;
  std::array<Tangency, 2> tangency{Tangency::OnSide, Tangency::OnSide};

  bool degenerate() const { return radius == 0.0; }
  bool touches_a_side() const {
    return tangency[0] == Tangency::OnSide || tangency[1] == Tangency::OnSide;
  }
};

/// Builds the circle of tangent length `tangent_length` in `angle`. `u` is
/// stored as given so that chains driven in u-space stay exact.
AngleCircle inscribe(const VertexAngle& angle, double tangent_length, double u);

AngleCircle circle_from_radius(const Triangle& tri, std::size_t vertex, double r);
AngleCircle circle_from_u(const Triangle& tri, std::size_t vertex, double u);

/// Length of the common external tangent of two externally tangent circles.
double tangent_segment_length(double r1, double r2);

struct TangentRoot {
  double u_next = 0.0;
  SignCase sign_case = SignCase::PlusOnSide;
};

/// Solves u^2 +/- 2 e u v + v^2 = s for the next v. Shared by triangles and
/// polygons. Throws Error(RadicandNegative) when no circle in the next angle
/// is tangent to the current one, Error(NegativeRoot) when the selected root
/// is negative.
TangentRoot tangent_root(double u, double side, double coupling, Choice choice);

/// One step of the u-recursion from `from_vertex` to the next vertex.
TangentRoot next_u(const Triangle& tri, std::size_t from_vertex, double u, Choice choice);

enum class Constructibility { Ok, NextTouchesOppositeSide, NotConstructible };

/// Only meaningful for circles touching the extensions of both sides of
/// their angle; any circle touching a side is Ok.
Constructibility constructibility_check(const Triangle& tri, const AngleCircle& circle);

struct Transition {
  AngleCircle circle;
  SignCase sign_case = SignCase::PlusOnSide;
};

/// Next circle of the chain. Throws Error(DegenerateCircle) for a point
/// circle input, Error(NotConstructible) when the circle misses the opposite
/// side, and whatever tangent_root throws.
Transition step(const Triangle& tri, const AngleCircle& current, Choice choice);

struct AlwaysSmaller {};
struct AlwaysLarger {};
/// Fair coin per step, seeded.
struct RandomChoice {
  std::uint64_t seed = 0;
};
/// Explicit choices; once exhausted the chain continues with Smaller.
struct Scripted {
  std::vector<Choice> choices;
};
using ChoicePolicy = std::variant<AlwaysSmaller, AlwaysLarger, RandomChoice, Scripted>;

/// Stateful source of choices for one chain.
class ChoiceSource {
 public:
  explicit ChoiceSource(ChoicePolicy policy);
  Choice next();

 private:
  ChoicePolicy policy_;
  std::size_t position_ = 0;
  std::mt19937_64 engine_;
};

enum class Termination { MaxSteps, CycleDetected, NotConstructible, DegenerateCircle };

struct ChainStep {
  std::size_t index = 1;  // 1-based position in the chain
  AngleCircle circle;
  std::optional<Choice> choice;       // empty for the initial circle
  std::optional<SignCase> sign_case;  // empty for the initial circle
};

struct Periodicity {
  std::size_t pre_period = 0;  // circles before the first one on the cycle
  std::size_t period = 0;      // cycle length in steps
};

struct ChainRecord {
  Triangle triangle;
  std::vector<ChainStep> steps;
  Termination termination = Termination::MaxSteps;
  std::optional<Periodicity> periodicity;
};

inline constexpr std::size_t kDefaultMaxSteps = 10000;
inline constexpr double kCycleTolerance = 1e-9;

/// Smallest pre-period m and period q (a multiple of `vertex_count`) such
/// that |u_{m+q} - u_m| <= tol, scanning for the earliest repeat.
std::optional<Periodicity> detect_periodicity(std::span<const ChainStep> steps,
                                              std::size_t vertex_count, double tol);

/// Checks whether the last element repeats an earlier one at the same vertex.
/// Used incrementally while a chain grows.
std::optional<Periodicity> match_last(std::span<const ChainStep> steps,
                                      std::size_t vertex_count, double tol);

ChainRecord run_chain(const Triangle& tri, const AngleCircle& initial,
                      const ChoicePolicy& policy, std::size_t max_steps = kDefaultMaxSteps,
                      double tol = kCycleTolerance);

/// Residual of t_i +/- 2 sqrt(r_i r_j) + t_j - s for two consecutive circles.
double tangency_equation_residual(double t_from, double r_from, double t_to, double r_to,
                                  double side, SignCase sign_case);

}  // namespace sixcircles
