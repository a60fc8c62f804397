#pragma once

#include <cstddef>
#include <string_view>
#include <utility>
#include <vector>

#include "sixcircles/rational.hpp"
#include "sixcircles/triangle.hpp"

namespace sixcircles {

// --- angle coordinates -----------------------------------------------------

/// phi = arcsin(u / sqrt(p)). Throws Error(DomainExceeded) if u^2 > p.
double phi_from_u(double u, double p);
double u_from_phi(double phi, double p);

/// One chain step in angle coordinates: phi -> |phi - beta|.
double step_map(double phi, double beta);

/// Range of phi at `vertex` from which the chain is 6-periodic with every
/// tangency on a side: [max(g1 - g2, g3 - g2, 0), min(g1, g3)] where g1, g2,
/// g3 are the betas met by the next three steps.
std::pair<double, double> periodic_window(const Triangle& tri, std::size_t vertex);

// --- the scaled composite map f(x) = |||x - 1| - a| - b| --------------------

/// Parameters of the composite map; valid when 1 <= a <= b < a + 1.
template <class Scalar>
struct BasicPlMapParams {
  Scalar a;
  Scalar b;

  /// Throws Error(InvalidParameters) unless 1 <= a <= b < a + 1.
  static BasicPlMapParams make(Scalar a, Scalar b);
};

using PlMapParams = BasicPlMapParams<double>;
using ExactPlMapParams = BasicPlMapParams<Rational>;

/// Betas sorted ascending and scaled by the smallest. The returned object is
/// a view for interval analysis; the chain itself runs in vertex order.
PlMapParams composite_params(const Triangle& tri);

enum class IntervalLabel { I1, I2, I3, AboveB };
std::string_view to_string(IntervalLabel label);

template <class Scalar>
struct Interval {
  Scalar lo;
  Scalar hi;
};

template <class Scalar>
struct Intervals {
  Interval<Scalar> i1;  // [0, b - a]
  Interval<Scalar> i2;  // [b - a, 1], the 2-periodic points
  Interval<Scalar> i3;  // [1, b]
};

template <class Scalar>
struct BasicOrbitReport {
  Scalar x0;
  /// Iterates up to and including the cycle.
  std::vector<Scalar> trajectory;
  std::size_t pre_period = 0;
  int period = 0;
  std::vector<Scalar> cycle;
  std::vector<IntervalLabel> interval_trace;
};

using OrbitReport = BasicOrbitReport<double>;
using ExactOrbitReport = BasicOrbitReport<Rational>;

template <class Scalar>
Scalar f_eval(const BasicPlMapParams<Scalar>& params, const Scalar& x);

template <class Scalar>
Intervals<Scalar> intervals(const BasicPlMapParams<Scalar>& params);

/// Shared endpoints go to the lower-indexed interval.
template <class Scalar>
IntervalLabel classify(const BasicPlMapParams<Scalar>& params, const Scalar& x);

/// Iterates until the orbit enters the closed interval I2 (widened by `tol`
/// on both ends). Pass tol = 0 with rationals for an exact certificate.
/// Throws Error(MaxIterExceeded) or Error(DomainExceeded) for x0 < 0.
template <class Scalar>
BasicOrbitReport<Scalar> orbit(const BasicPlMapParams<Scalar>& params, const Scalar& x0,
                               std::size_t max_iter, const Scalar& tol);

/// The unique fixed point (1 + b - a) / 2, midpoint of I2.
template <class Scalar>
Scalar fixed_point(const BasicPlMapParams<Scalar>& params);

/// Upper bound on the pre-period of x0: iterates needed to descend into
/// [0, b], plus ceil((b - 1) / (1 + a - b)) + 2.
template <class Scalar>
std::size_t preperiod_bound(const BasicPlMapParams<Scalar>& params, const Scalar& x0);

inline constexpr double kOrbitTolerance = 1e-9;

/// Upper bound on the pre-period, counted in circles, of a smaller-choice
/// chain starting at `vertex` with angle coordinate `phi0`.
std::size_t chain_preperiod_bound(const Triangle& tri, double phi0);

}  // namespace sixcircles
