#pragma once

#include <array>
#include <cstddef>

#include "sixcircles/chain.hpp"
#include "sixcircles/pl_map.hpp"
#include "sixcircles/triangle.hpp"

// Brute-force reference solvers. They work from Cartesian distances and
// exact arithmetic only, and serve as ground truth for the closed-form
// chain and map routines.
namespace sixcircles::oracles {

/// Radius of the circle in the next angle that is externally tangent to
/// `from`, found by scanning and bisecting
///   g(t) = |center(t) - center_from| - (r(t) + r_from)
/// along the next vertex's bisector for tangent lengths t in (0, p].
/// Smaller takes the root nearest the vertex, Larger the farthest.
/// Throws Error(NoRoot) if g never changes sign.
double brute_force_next_circle(const Triangle& tri, const AngleCircle& from, Choice choice);

/// Exact orbit of f(x) = |||x - 1| - a| - b| in rational arithmetic.
ExactOrbitReport exact_rational_orbit(const Rational& a, const Rational& b, const Rational& x0,
                                      std::size_t max_iter);

/// Radii of the three pairwise tangent circles, one per angle. Located as
/// the fixed point of three brute-force smaller-choice steps, bracketed and
/// bisected in the tangent length at vertex 0.
std::array<double, 3> brute_force_malfatti(const Triangle& tri);

}  // namespace sixcircles::oracles
