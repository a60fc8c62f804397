#include "sixcircles/pl_map.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "sixcircles/error.hpp"

namespace sixcircles {
namespace {

template <class Scalar>
Scalar abs_value(const Scalar& x) {
  return x < Scalar(0) ? Scalar(-x) : x;
}

std::size_t ceil_count(double x) { return x <= 0.0 ? 0 : static_cast<std::size_t>(std::ceil(x)); }

std::size_t ceil_count(const Rational& x) {
  if (x <= 0) return 0;
  const BigInt num = boost::multiprecision::numerator(x);
  const BigInt den = boost::multiprecision::denominator(x);
  BigInt q = num / den;
  if (q * den != num) ++q;
  return q.convert_to<std::size_t>();
}

template <class Scalar>
std::string describe(const Scalar& x) {
  if constexpr (std::is_same_v<Scalar, Rational>) {
    return format_rational(x);
  } else {
    std::ostringstream out;
    out << x;
    return out.str();
  }
}

}  // namespace

double phi_from_u(double u, double p) {
  if (u < 0.0 || u * u > p) {
    std::ostringstream msg;
    msg << "u=" << u << " outside [0, sqrt(p)] for p=" << p;
    throw Error(ErrorCode::DomainExceeded, msg.str());
  }
  return std::asin(std::min(1.0, u / std::sqrt(p)));
}

double u_from_phi(double phi, double p) { return std::sqrt(p) * std::sin(phi); }

double step_map(double phi, double beta) { return std::abs(phi - beta); }

std::pair<double, double> periodic_window(const Triangle& tri, std::size_t vertex) {
  const auto& beta = tri.betas();
  const double g1 = beta[Triangle::side_after(vertex)];
  const double g2 = beta[Triangle::side_after(Triangle::next(vertex))];
  const double g3 = beta[Triangle::side_after(Triangle::prev(vertex))];
  return {std::max({g1 - g2, g3 - g2, 0.0}), std::min(g1, g3)};
}

template <class Scalar>
BasicPlMapParams<Scalar> BasicPlMapParams<Scalar>::make(Scalar a, Scalar b) {
  if (!(Scalar(1) <= a && a <= b && b < a + Scalar(1))) {
    throw Error(ErrorCode::InvalidParameters,
                "need 1 <= a <= b < a + 1, got a=" + describe(a) + " b=" + describe(b));
  }
  return {std::move(a), std::move(b)};
}

PlMapParams composite_params(const Triangle& tri) {
  auto beta = tri.betas();
  std::sort(beta.begin(), beta.end());
  return PlMapParams::make(beta[1] / beta[0], beta[2] / beta[0]);
}

std::string_view to_string(IntervalLabel label) {
  switch (label) {
    case IntervalLabel::I1: return "I1";
    case IntervalLabel::I2: return "I2";
    case IntervalLabel::I3: return "I3";
    case IntervalLabel::AboveB: return "AboveB";
  }
  return "?";
}

template <class Scalar>
Scalar f_eval(const BasicPlMapParams<Scalar>& params, const Scalar& x) {
  return abs_value(Scalar(abs_value(Scalar(abs_value(Scalar(x - Scalar(1))) - params.a)) -
                          params.b));
}

template <class Scalar>
Intervals<Scalar> intervals(const BasicPlMapParams<Scalar>& params) {
  const Scalar left = params.b - params.a;
  return {{Scalar(0), left}, {left, Scalar(1)}, {Scalar(1), params.b}};
}

template <class Scalar>
IntervalLabel classify(const BasicPlMapParams<Scalar>& params, const Scalar& x) {
  if (x <= params.b - params.a) return IntervalLabel::I1;
  if (x <= Scalar(1)) return IntervalLabel::I2;
  if (x <= params.b) return IntervalLabel::I3;
  return IntervalLabel::AboveB;
}

template <class Scalar>
BasicOrbitReport<Scalar> orbit(const BasicPlMapParams<Scalar>& params, const Scalar& x0,
                               std::size_t max_iter, const Scalar& tol) {
  if (x0 < Scalar(0)) {
    throw Error(ErrorCode::DomainExceeded, "orbit start " + describe(x0) + " is negative");
  }
  const Scalar lo = params.b - params.a - tol;
  const Scalar hi = Scalar(1) + tol;

  BasicOrbitReport<Scalar> report;
  report.x0 = x0;
  Scalar x = x0;
  for (std::size_t i = 0;; ++i) {
    report.trajectory.push_back(x);
    report.interval_trace.push_back(classify(params, x));
    if (lo <= x && x <= hi) {
      report.pre_period = i;
      break;
    }
    if (i == max_iter) {
      throw Error(ErrorCode::MaxIterExceeded,
                  "orbit of " + describe(x0) + " did not reach I2 within " +
                      std::to_string(max_iter) + " iterations");
    }
    x = f_eval(params, x);
  }

  if (abs_value(Scalar(x - fixed_point(params))) <= tol) {
    report.period = 1;
    report.cycle = {x};
  } else {
    report.period = 2;
    Scalar partner = f_eval(params, x);
    report.trajectory.push_back(partner);
    report.interval_trace.push_back(classify(params, partner));
    report.cycle = {x, std::move(partner)};
  }
  return report;
}

template <class Scalar>
Scalar fixed_point(const BasicPlMapParams<Scalar>& params) {
  return (Scalar(1) + params.b - params.a) / Scalar(2);
}

template <class Scalar>
std::size_t preperiod_bound(const BasicPlMapParams<Scalar>& params, const Scalar& x0) {
  const Scalar period_width = Scalar(1) + params.a - params.b;
  std::size_t descent = 0;
  if (x0 > params.b) {
    descent = ceil_count(Scalar((x0 - params.b) / (params.a + params.b + Scalar(1))));
  }
  return descent + ceil_count(Scalar((params.b - Scalar(1)) / period_width)) + 2;
}

std::size_t chain_preperiod_bound(const Triangle& tri, double phi0) {
  const auto& beta = tri.betas();
  const double smallest = *std::min_element(beta.begin(), beta.end());
  return 3 * preperiod_bound(composite_params(tri), phi0 / smallest) + 2;
}

#define SIXCIRCLES_INSTANTIATE(Scalar)                                                     \
  template struct BasicPlMapParams<Scalar>;                                                \
  template Scalar f_eval(const BasicPlMapParams<Scalar>&, const Scalar&);                  \
  template Intervals<Scalar> intervals(const BasicPlMapParams<Scalar>&);                   \
  template IntervalLabel classify(const BasicPlMapParams<Scalar>&, const Scalar&);         \
  template BasicOrbitReport<Scalar> orbit(const BasicPlMapParams<Scalar>&, const Scalar&,  \
                                          std::size_t, const Scalar&);                     \
  template Scalar fixed_point(const BasicPlMapParams<Scalar>&);                            \
  template std::size_t preperiod_bound(const BasicPlMapParams<Scalar>&, const Scalar&);

SIXCIRCLES_INSTANTIATE(double)
SIXCIRCLES_INSTANTIATE(Rational)

#undef SIXCIRCLES_INSTANTIATE

Rational parse_rational(std::string_view text) {
  const auto fail = [&] {
    throw std::invalid_argument("not a rational number: '" + std::string(text) + "'");
  };
  if (text.empty()) fail();
  if (const auto slash = text.find('/'); slash != std::string_view::npos) {
    const Rational num = parse_rational(text.substr(0, slash));
    const Rational den = parse_rational(text.substr(slash + 1));
    if (den == 0) fail();
    return num / den;
  }

  std::size_t pos = 0;
  bool negative = false;
  if (text[pos] == '+' || text[pos] == '-') negative = text[pos++] == '-';
  BigInt digits = 0;
  long long scale = 0;
  bool any_digit = false;
  bool after_point = false;
  for (; pos < text.size(); ++pos) {
    const char c = text[pos];
    if (c >= '0' && c <= '9') {
      digits = digits * 10 + (c - '0');
      any_digit = true;
      if (after_point) --scale;
    } else if (c == '.' && !after_point) {
      after_point = true;
    } else {
      break;
    }
  }
  if (!any_digit) fail();
  if (pos < text.size()) {
    if (text[pos] != 'e' && text[pos] != 'E') fail();
    try {
      std::size_t used = 0;
      const std::string exponent(text.substr(pos + 1));
      scale += std::stoll(exponent, &used);
      if (used != exponent.size()) fail();
    } catch (const std::logic_error&) {
      fail();
    }
  }
  Rational value(digits);
  const BigInt power = boost::multiprecision::pow(BigInt(10), static_cast<unsigned>(std::llabs(scale)));
  if (scale >= 0) {
    value *= power;
  } else {
    value /= power;
  }
  return negative ? Rational(-value) : value;
}

std::string format_rational(const Rational& value) {
  const BigInt num = boost::multiprecision::numerator(value);
  const BigInt den = boost::multiprecision::denominator(value);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

}  // namespace sixcircles
