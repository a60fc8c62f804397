#include "sixcircles/oracles.hpp"

#include <cmath>
#include <optional>
#include <sstream>
#include <vector>

#include "sixcircles/error.hpp"

namespace sixcircles::oracles {
namespace {

constexpr std::size_t kScanSamples = 8192;
constexpr int kBisectionSteps = 200;

// Signed gap between the circle of tangent length t at `angle` and `from`;
// zero exactly at external tangency.
double tangency_gap(const VertexAngle& angle, const AngleCircle& from, double t) {
  const double secant = std::sqrt(1.0 + angle.tan_half * angle.tan_half);
  const Point bisector = normalized(angle.toward_prev + angle.toward_next);
  const Point center = angle.apex + (t * secant) * bisector;
  return distance(center, from.center) - (t * angle.tan_half + from.radius);
}

double bisect(const VertexAngle& angle, const AngleCircle& from, double lo, double hi) {
  double g_lo = tangency_gap(angle, from, lo);
  for (int i = 0; i < kBisectionSteps && hi - lo > 1e-15 * hi; ++i) {
    const double mid = 0.5 * (lo + hi);
    const double g_mid = tangency_gap(angle, from, mid);
    if (g_mid == 0.0) return mid;
    if ((g_mid < 0.0) == (g_lo < 0.0)) {
      lo = mid;
      g_lo = g_mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

double next_tangent_length(const Triangle& tri, const AngleCircle& from, Choice choice) {
  const VertexAngle angle = tri.vertex_angle(Triangle::next(from.vertex));
  const double upper = tri.semiperimeter();

  std::vector<double> roots;
  double t_prev = 0.0;
  double g_prev = tangency_gap(angle, from, t_prev);
  for (std::size_t k = 1; k <= kScanSamples; ++k) {
    const double t = upper * static_cast<double>(k) / static_cast<double>(kScanSamples);
    const double g = tangency_gap(angle, from, t);
    if (g == 0.0) {
      roots.push_back(t);
    } else if (g_prev != 0.0 && (g < 0.0) != (g_prev < 0.0)) {
      roots.push_back(bisect(angle, from, t_prev, t));
    }
    t_prev = t;
    g_prev = g;
  }
  if (roots.empty()) {
    std::ostringstream msg;
    msg << "no tangent circle at vertex " << angle.index << " for t in (0, " << upper << "]";
    throw Error(ErrorCode::NoRoot, msg.str());
  }
  return choice == Choice::Smaller ? roots.front() : roots.back();
}

AngleCircle circle_with_tangent_length(const Triangle& tri, std::size_t vertex, double t) {
  return inscribe(tri.vertex_angle(vertex), t, std::sqrt(t));
}

}  // namespace

double brute_force_next_circle(const Triangle& tri, const AngleCircle& from, Choice choice) {
  const double t = next_tangent_length(tri, from, choice);
  return t * tri.tan_half_angles()[Triangle::next(from.vertex)];
}

ExactOrbitReport exact_rational_orbit(const Rational& a, const Rational& b, const Rational& x0,
                                      std::size_t max_iter) {
  const auto abs_q = [](const Rational& q) { return q < 0 ? Rational(-q) : q; };
  const auto f = [&](const Rational& x) { return abs_q(abs_q(abs_q(x - 1) - a) - b); };
  const auto label = [&](const Rational& x) {
    if (x <= b - a) return IntervalLabel::I1;
    if (x <= 1) return IntervalLabel::I2;
    if (x <= b) return IntervalLabel::I3;
    return IntervalLabel::AboveB;
  };

  ExactOrbitReport report;
  report.x0 = x0;
  Rational x = x0;
  std::size_t n = 0;
  while (!(b - a <= x && x <= 1)) {
    report.trajectory.push_back(x);
    report.interval_trace.push_back(label(x));
    if (n++ == max_iter) {
      throw Error(ErrorCode::MaxIterExceeded,
                  "exact orbit of " + format_rational(x0) + " did not reach [b-a, 1]");
    }
    x = f(x);
  }
  report.pre_period = n;
  report.trajectory.push_back(x);
  report.interval_trace.push_back(label(x));
  const Rational partner = f(x);
  if (partner == x) {
    report.period = 1;
    report.cycle = {x};
  } else {
    report.period = 2;
    report.cycle = {x, partner};
    report.trajectory.push_back(partner);
    report.interval_trace.push_back(label(partner));
  }
  return report;
}

std::array<double, 3> brute_force_malfatti(const Triangle& tri) {
  // Three smaller-choice steps around the triangle, in tangent length at
  // vertex 0. Large starts can leave the domain of the step (no tangent
  // circle exists), so the excess is optional. Where defined it crosses
  // from positive to non-positive exactly once.
  const auto excess = [&](double t) -> std::optional<double> {
    try {
      AngleCircle circle = circle_with_tangent_length(tri, 0, t);
      for (std::size_t v = 0; v < 3; ++v) {
        const double next_t = next_tangent_length(tri, circle, Choice::Smaller);
        circle = circle_with_tangent_length(tri, Triangle::next(circle.vertex), next_t);
      }
      return circle.tangent_length - t;
    } catch (const Error&) {
      return std::nullopt;
    }
  };

  const double reach = std::min(tri.side(1), tri.side(2));
  constexpr std::size_t kGrid = 512;
  double lo = 0.0;
  double hi = 0.0;
  std::optional<double> previous;
  for (std::size_t k = 1; k <= kGrid; ++k) {
    const double t = reach * static_cast<double>(k) / static_cast<double>(kGrid);
    const std::optional<double> g = excess(t);
    if (previous && g && *previous > 0.0 && *g <= 0.0) {
      lo = t - reach / static_cast<double>(kGrid);
      hi = t;
      break;
    }
    previous = g;
  }
  if (hi == 0.0) throw Error(ErrorCode::NoConvergence, "three-step map has no bracketed fixed point");

  for (int i = 0; i < kBisectionSteps && hi - lo > 1e-15 * hi; ++i) {
    const double mid = 0.5 * (lo + hi);
    const std::optional<double> g = excess(mid);
    if (!g) throw Error(ErrorCode::NoConvergence, "three-step map undefined inside the bracket");
    (*g > 0.0 ? lo : hi) = mid;
  }

  std::array<double, 3> radii{};
  AngleCircle circle = circle_with_tangent_length(tri, 0, 0.5 * (lo + hi));
  for (std::size_t v = 0; v < 3; ++v) {
    radii[v] = circle.radius;
    const double next_t = next_tangent_length(tri, circle, Choice::Smaller);
    circle = circle_with_tangent_length(tri, Triangle::next(circle.vertex), next_t);
  }
  return radii;
}

}  // namespace sixcircles::oracles
