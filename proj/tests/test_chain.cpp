#include <doctest.h>

#include <cmath>
#include <numbers>

#include "sixcircles/chain.hpp"
#include "sixcircles/error.hpp"
#include "sixcircles/pl_map.hpp"
#include "support.hpp"

using namespace sixcircles;
using doctest::Approx;

namespace {

const double kU1 = std::sqrt(6.0) * std::sin(0.3);  // 0.723874

AngleCircle worked_start(const Triangle& tri) { return circle_from_u(tri, 0, kU1); }

}  // namespace

TEST_CASE("tangent segment between two tangent circles") {
  CHECK(tangent_segment_length(1, 1) == 2.0);
  CHECK(tangent_segment_length(0, 3) == 0.0);
  CHECK(tangent_segment_length(0.25, 4) == 2.0);
}

TEST_CASE("circle from radius") {
  const Triangle tri(3, 4, 5);
  const AngleCircle small = circle_from_radius(tri, 0, 0.174613);
  CHECK(small.tangent_length == Approx(0.523839).epsilon(1e-6));
  CHECK(small.tangency[0] == Tangency::OnSide);
  CHECK(small.tangency[1] == Tangency::OnSide);

  const AngleCircle big = circle_from_radius(tri, 1, 3);
  CHECK(big.tangent_length == Approx(6.0));
  CHECK(big.tangency[0] == Tangency::OnExtension);
  CHECK(big.tangency[1] == Tangency::OnExtension);
  CHECK_FALSE(big.touches_a_side());

  const AngleCircle point = circle_from_radius(tri, 2, 0);
  CHECK(point.degenerate());
  CHECK(point.center == tri.vertices()[2]);
}

TEST_CASE("circle center is equidistant from both sides") {
  const Triangle tri(3, 4, 5);
  const AngleCircle c = circle_from_radius(tri, 2, 0.4);
  const auto& v = tri.vertices();
  CHECK(distance_to_line(c.center, v[2], v[0]) == Approx(0.4));
  CHECK(distance_to_line(c.center, v[2], v[1]) == Approx(0.4));
}

TEST_CASE("next_u worked values") {
  const Triangle tri(3, 4, 5);
  const TangentRoot root = next_u(tri, 0, kU1, Choice::Smaller);
  CHECK(root.u_next == Approx(1.840677).epsilon(1e-6));
  CHECK(root.u_next == Approx(std::sqrt(6.0) * std::sin(tri.betas()[2] - 0.3)).epsilon(1e-12));
  CHECK(root.sign_case == SignCase::PlusOnSide);

  const TangentRoot edge = next_u(tri, 0, std::sqrt(5.0), Choice::Smaller);
  CHECK(edge.u_next == Approx(0.0).epsilon(1e-12));

  const TangentRoot beyond = next_u(tri, 0, 2.3, Choice::Smaller);
  CHECK(beyond.sign_case == SignCase::MinusOnExtension);
}

TEST_CASE("equilateral fixed radius") {
  const Triangle tri(1, 1, 1);
  const double u_star = std::sqrt(1.5) * std::sin(tri.betas()[0] / 2);
  CHECK(u_star == Approx(0.563016).epsilon(1e-6));
  const TangentRoot root = next_u(tri, 0, u_star, Choice::Smaller);
  CHECK(root.u_next == Approx(u_star).epsilon(1e-12));
  const double r = u_star * u_star * std::tan(std::numbers::pi / 6);
  CHECK(r == Approx((std::sqrt(3.0) - 1) / 4).epsilon(1e-12));
}

TEST_CASE("larger root lies beyond the smaller one") {
  const Triangle tri(3, 4, 5);
  for (double u : {0.1, 0.7, 1.5, 2.2}) {
    const double small = next_u(tri, 0, u, Choice::Smaller).u_next;
    const double large = next_u(tri, 0, u, Choice::Larger).u_next;
    CHECK(large >= small);
  }
}

TEST_CASE("step from the worked circle") {
  const Triangle tri(3, 4, 5);
  const Transition next = step(tri, worked_start(tri), Choice::Smaller);
  CHECK(next.circle.vertex == 1);
  CHECK(next.circle.radius == Approx(1.694046).epsilon(1e-6));
  CHECK_THROWS_AS(step(tri, circle_from_radius(tri, 0, 0), Choice::Smaller), Error);
}

TEST_CASE("constructibility") {
  const Triangle tri(3, 4, 5);
  CHECK(constructibility_check(tri, worked_start(tri)) == Constructibility::Ok);
  CHECK(constructibility_check(tri, circle_from_radius(tri, 1, 100)) ==
        Constructibility::NotConstructible);
  const Constructibility big = constructibility_check(tri, circle_from_radius(tri, 1, 3));
  CHECK(big != Constructibility::Ok);
}

TEST_CASE("worked chain with a pre-period") {
  const Triangle tri(3, 4, 5);
  const ChainRecord record = run_chain(tri, worked_start(tri), AlwaysSmaller{}, 100);
  REQUIRE(record.termination == Termination::CycleDetected);
  REQUIRE(record.periodicity.has_value());
  CHECK(record.periodicity->pre_period == 2);
  CHECK(record.periodicity->period == 6);

  const std::array<double, 9> phi{0.3,      0.850262, 0.064864, 0.890453, 0.259809,
                                  0.525589, 0.429728, 0.720534, 0.064864};
  REQUIRE(record.steps.size() == 9);
  for (std::size_t i = 0; i < phi.size(); ++i) {
    const double got = phi_from_u(record.steps[i].circle.u, tri.semiperimeter());
    CHECK(got == Approx(phi[i]).epsilon(1e-6));
    CHECK(record.steps[i].index == i + 1);
  }
  CHECK(distance(record.steps[8].circle.center, record.steps[2].circle.center) < 1e-9);
  CHECK(std::abs(record.steps[7].circle.radius - record.steps[1].circle.radius) > 1e-3);
  CHECK_FALSE(record.steps[0].choice.has_value());
}

TEST_CASE("equilateral Malfatti chain closes after three") {
  const Triangle tri(1, 1, 1);
  const double u_star = std::sqrt(1.5) * std::sin(tri.betas()[0] / 2);
  const ChainRecord record = run_chain(tri, circle_from_u(tri, 0, u_star), AlwaysSmaller{}, 50);
  REQUIRE(record.periodicity.has_value());
  CHECK(record.periodicity->pre_period == 0);
  CHECK(record.periodicity->period == 3);
}

TEST_CASE("window start is periodic from the first circle") {
  const Triangle tri(3, 4, 5);
  const auto [lo, hi] = periodic_window(tri, 0);
  CHECK(lo == Approx(0.364864).epsilon(1e-6));
  CHECK(hi == Approx(0.955317).epsilon(1e-6));
  const double phi = 0.3 * lo + 0.7 * hi;  // the midpoint is the Malfatti circle
  const ChainRecord record = run_chain(
      tri, circle_from_u(tri, 0, u_from_phi(phi, tri.semiperimeter())), AlwaysSmaller{}, 100);
  REQUIRE(record.periodicity.has_value());
  CHECK(record.periodicity->pre_period == 0);
  CHECK(record.periodicity->period == 6);
  CHECK(std::abs(record.steps[6].circle.radius - record.steps[0].circle.radius) < 1e-9);
}

TEST_CASE("periodicity detection on hand-made sequences") {
  const Triangle tri(3, 4, 5);
  const auto make = [&](std::initializer_list<double> us) {
    std::vector<ChainStep> steps;
    std::size_t i = 0;
    for (double u : us) {
      steps.push_back({i + 1, circle_from_u(tri, i % 3, u), {}, {}});
      ++i;
    }
    return steps;
  };
  const auto constant = make({0.5, 0.5, 0.5, 0.5});
  auto found = detect_periodicity(constant, 3, 1e-9);
  REQUIRE(found);
  CHECK(found->pre_period == 0);
  CHECK(found->period == 3);

  CHECK_FALSE(detect_periodicity(make({0.5, 0.6, 0.7}), 3, 1e-9));
  found = detect_periodicity(make({0.9, 0.5, 0.6, 0.7, 0.5}), 3, 1e-9);
  REQUIRE(found);
  CHECK(found->pre_period == 1);
  CHECK(found->period == 3);
}

TEST_CASE("choice policies") {
  ChoiceSource scripted(Scripted{{Choice::Larger, Choice::Smaller}});
  CHECK(scripted.next() == Choice::Larger);
  CHECK(scripted.next() == Choice::Smaller);
  CHECK(scripted.next() == Choice::Smaller);

  ChoiceSource a(RandomChoice{42});
  ChoiceSource b(RandomChoice{42});
  int larger = 0;
  for (int i = 0; i < 200; ++i) {
    const Choice c = a.next();
    CHECK(c == b.next());
    larger += c == Choice::Larger;
  }
  CHECK(larger > 50);
  CHECK(larger < 150);
}

TEST_CASE("random-choice chains are reproducible") {
  const Triangle tri(3, 4, 5);
  const ChainRecord a = run_chain(tri, worked_start(tri), RandomChoice{7}, 300);
  const ChainRecord b = run_chain(tri, worked_start(tri), RandomChoice{7}, 300);
  REQUIRE(a.steps.size() == b.steps.size());
  for (std::size_t i = 0; i < a.steps.size(); ++i) {
    CHECK(a.steps[i].circle.radius == b.steps[i].circle.radius);
  }
  CHECK(a.termination == b.termination);
}

TEST_CASE("consecutive circles are externally tangent and satisfy the tangency equation") {
  std::mt19937_64 engine(5);
  int plus = 0;
  int minus = 0;
  for (int n = 0; n < 500; ++n) {
    const Triangle tri = testing::random_triangle(engine);
    const std::size_t vertex = engine() % 3;
    const double p = tri.semiperimeter();
    const double u = std::sqrt(p) * testing::uniform(engine, 0.0, 1.0);
    const Choice choice = engine() % 2 ? Choice::Larger : Choice::Smaller;
    const AngleCircle from = circle_from_u(tri, vertex, u);
    Transition next;
    try {
      next = step(tri, from, choice);
    } catch (const Error&) {
      continue;
    }
    (next.sign_case == SignCase::PlusOnSide ? plus : minus) += 1;
    const double side = tri.side(Triangle::side_after(vertex));
    CHECK(std::abs(tangency_equation_residual(from.tangent_length, from.radius,
                                              next.circle.tangent_length, next.circle.radius,
                                              side, next.sign_case)) <= 1e-9 * (1 + side));
    const double gap = distance(from.center, next.circle.center) - from.radius - next.circle.radius;
    CHECK(std::abs(gap) <= 1e-9 * (1 + from.radius + next.circle.radius));
  }
  CHECK(plus > 50);
  CHECK(minus > 50);
}

TEST_CASE("every smaller-choice circle touches a side") {
  std::mt19937_64 engine(9);
  for (int n = 0; n < 100; ++n) {
    const Triangle tri = testing::random_triangle(engine);
    const auto& beta = tri.betas();
    const double phi = testing::uniform(engine, 0.0, *std::min_element(beta.begin(), beta.end()));
    const ChainRecord record = run_chain(
        tri, circle_from_u(tri, 0, u_from_phi(phi, tri.semiperimeter())), AlwaysSmaller{});
    CHECK(record.termination == Termination::CycleDetected);
    for (const ChainStep& s : record.steps) CHECK(s.circle.touches_a_side());
  }
}
