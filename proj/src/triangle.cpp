#include "sixcircles/triangle.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "sixcircles/error.hpp"

namespace sixcircles {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NonPositiveSide: return "NonPositiveSide";
    case ErrorCode::TriangleInequalityViolated: return "TriangleInequalityViolated";
    case ErrorCode::NotConvex: return "NotConvex";
    case ErrorCode::InvalidParameters: return "InvalidParameters";
    case ErrorCode::RadicandNegative: return "RadicandNegative";
    case ErrorCode::NegativeRoot: return "NegativeRoot";
    case ErrorCode::NotConstructible: return "NotConstructible";
    case ErrorCode::DegenerateCircle: return "DegenerateCircle";
    case ErrorCode::DomainExceeded: return "DomainExceeded";
    case ErrorCode::MaxIterExceeded: return "MaxIterExceeded";
    case ErrorCode::NoRoot: return "NoRoot";
    case ErrorCode::NoConvergence: return "NoConvergence";
    case ErrorCode::OrbitTerminated: return "OrbitTerminated";
    case ErrorCode::BadScenario: return "BadScenario";
  }
  return "Unknown";
}

Triangle::Triangle(double a1, double a2, double a3) : sides_{a1, a2, a3} {
  for (double a : sides_) {
    if (!(a > 0.0) || !std::isfinite(a)) {
      std::ostringstream msg;
      msg << "side length " << a << " is not positive";
      throw Error(ErrorCode::NonPositiveSide, msg.str());
    }
  }
  p_ = (a1 + a2 + a3) / 2.0;
  for (std::size_t i = 0; i < 3; ++i) {
    // Exact comparison: degeneracy is the caller's business.
    if (!(p_ > sides_[i])) {
      std::ostringstream msg;
      msg << "sides (" << a1 << ", " << a2 << ", " << a3 << ") violate the triangle inequality";
      throw Error(ErrorCode::TriangleInequalityViolated, msg.str());
    }
    tangent_lengths_[i] = p_ - sides_[i];
  }

  const auto& t = tangent_lengths_;
  for (std::size_t i = 0; i < 3; ++i) {
    // (1 - cos 2a) / sin 2a with the law of cosines, written in tangent lengths.
    tan_half_[i] = std::sqrt(t[next(i)] * t[prev(i)] / (p_ * t[i]));
    half_angles_[i] = std::atan(tan_half_[i]);
    // arcsin(sqrt(a/p)) without the ill-conditioned arcsin near 1.
    betas_[i] = std::atan2(std::sqrt(sides_[i]), std::sqrt(t[i]));
  }
  for (std::size_t k = 0; k < 3; ++k) {
    couplings_[k] = std::sqrt(tan_half_[next(k)] * tan_half_[prev(k)]);
  }

  // Height from Heron's formula rather than sqrt(a2^2 - x^2).
  const double height = 2.0 * std::sqrt(p_ * t[0] * t[1] * t[2]) / a3;
  const double x3 = (a3 * a3 + a2 * a2 - a1 * a1) / (2.0 * a3);
  vertices_ = {Point{0.0, 0.0}, Point{a3, 0.0}, Point{x3, height}};
}

VertexAngle Triangle::vertex_angle(std::size_t i) const {
  VertexAngle angle;
  angle.index = i;
  angle.apex = vertices_[i];
  angle.toward_next = normalized(vertices_[next(i)] - vertices_[i]);
  angle.toward_prev = normalized(vertices_[prev(i)] - vertices_[i]);
  angle.next_side = sides_[side_after(i)];
  angle.prev_side = sides_[side_after(prev(i))];
  angle.tan_half = tan_half_[i];
  return angle;
}

double lemma_tri_residual(const Triangle& tri, std::size_t k) {
  const auto& tans = tri.tan_half_angles();
  return 1.0 - tans[Triangle::next(k)] * tans[Triangle::prev(k)] -
         tri.side(k) / tri.semiperimeter();
}

double beta_inequality_margin(const Triangle& tri) {
  auto b = tri.betas();
  std::sort(b.begin(), b.end());
  return (b[0] + b[1]) - b[2];
}

}  // namespace sixcircles
