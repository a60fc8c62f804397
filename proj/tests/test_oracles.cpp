#include <doctest.h>

#include <cmath>

#include "sixcircles/chain.hpp"
#include "sixcircles/error.hpp"
#include "sixcircles/oracles.hpp"
#include "sixcircles/pl_map.hpp"
#include "support.hpp"

using namespace sixcircles;
using doctest::Approx;

TEST_CASE("brute-force next circle on the worked example") {
  const Triangle tri(3, 4, 5);
  const AngleCircle from = circle_from_u(tri, 0, std::sqrt(6.0) * std::sin(0.3));
  CHECK(from.radius == Approx(0.174664).epsilon(1e-6));
  CHECK(oracles::brute_force_next_circle(tri, from, Choice::Smaller) ==
        Approx(1.694046).epsilon(1e-6));
}

TEST_CASE("brute-force next circle keeps the equilateral Malfatti radius") {
  const Triangle tri(1, 1, 1);
  const double r = (std::sqrt(3.0) - 1) / 4;
  CHECK(oracles::brute_force_next_circle(tri, circle_from_radius(tri, 2, r), Choice::Smaller) ==
        Approx(r).epsilon(1e-12));
}

TEST_CASE("oracle matches the closed-form root") {
  std::mt19937_64 engine(21);
  int compared = 0;
  for (int n = 0; n < 400; ++n) {
    const Triangle tri = testing::random_triangle(engine);
    const std::size_t vertex = engine() % 3;
    const double u = std::sqrt(tri.semiperimeter()) * testing::uniform(engine, 0.02, 0.98);
    const Choice choice = engine() % 2 ? Choice::Larger : Choice::Smaller;
    const double closed = next_u(tri, vertex, u, choice).u_next;
    if (closed <= 0.0) continue;
    const double r = closed * closed * tri.tan_half_angles()[Triangle::next(vertex)];
    const double brute = oracles::brute_force_next_circle(tri, circle_from_u(tri, vertex, u), choice);
    CHECK(brute == Approx(r).epsilon(1e-9));
    ++compared;
  }
  CHECK(compared > 300);
}

TEST_CASE("exact rational orbit oracle") {
  const auto family = oracles::exact_rational_orbit(Rational(1), Rational(199, 100), Rational(1, 100), 1000);
  CHECK(family.pre_period == 99);
  CHECK(family.cycle == std::vector<Rational>{1, Rational(99, 100)});

  const auto fixed = oracles::exact_rational_orbit(Rational(18, 5), Rational(21, 5), Rational(4, 5), 10);
  CHECK(fixed.period == 1);
  CHECK(fixed.cycle == std::vector<Rational>{Rational(4, 5)});

  const auto cascade = oracles::exact_rational_orbit(Rational(18, 5), Rational(21, 5), Rational(0), 100);
  CHECK(cascade.trajectory[1] == Rational(8, 5));
  CHECK(cascade.cycle.front() >= Rational(3, 5));
  CHECK(cascade.cycle.front() <= 1);

  CHECK_THROWS_AS(oracles::exact_rational_orbit(Rational(1), Rational(1999, 1000), Rational(1, 1000), 5),
                  Error);
}

TEST_CASE("Malfatti oracle") {
  const auto eq = oracles::brute_force_malfatti(Triangle(1, 1, 1));
  for (double r : eq) CHECK(r == Approx((std::sqrt(3.0) - 1) / 4).epsilon(1e-9));

  const Triangle tri(3, 4, 5);
  const auto radii = oracles::brute_force_malfatti(tri);
  std::array<AngleCircle, 3> circles;
  for (std::size_t v = 0; v < 3; ++v) circles[v] = circle_from_radius(tri, v, radii[v]);
  for (std::size_t v = 0; v < 3; ++v) {
    const AngleCircle& c = circles[v];
    const AngleCircle& d = circles[(v + 1) % 3];
    CHECK(std::abs(distance(c.center, d.center) - c.radius - d.radius) <= 1e-9);
  }
  // The circle at the second vertex sits at the unscaled fixed point.
  CHECK(phi_from_u(circles[1].u, tri.semiperimeter()) ==
        Approx(fixed_point(composite_params(tri)) * tri.betas()[0]).epsilon(1e-9));
}

TEST_CASE("Malfatti radii scale with the triangle") {
  const auto unit = oracles::brute_force_malfatti(Triangle(0.9, 1.3, 1.1));
  const auto twice = oracles::brute_force_malfatti(Triangle(1.8, 2.6, 2.2));
  for (std::size_t v = 0; v < 3; ++v) CHECK(twice[v] == Approx(2 * unit[v]).epsilon(1e-9));
}

TEST_CASE("Malfatti radii are fixed by three closed-form steps") {
  std::mt19937_64 engine(17);
  for (int n = 0; n < 50; ++n) {
    const Triangle tri = testing::random_triangle(engine);
    const auto radii = oracles::brute_force_malfatti(tri);
    const AngleCircle start = circle_from_radius(tri, 0, radii[0]);
    double u = start.u;
    for (std::size_t v = 0; v < 3; ++v) u = next_u(tri, v, u, Choice::Smaller).u_next;
    CHECK(std::abs(u - start.u) <= 1e-9);
  }
}
