#pragma once

#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace sixcircles {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

/// Parses "18/5", "-3", "3.6" or "1e-3" exactly. Throws std::invalid_argument.
Rational parse_rational(std::string_view text);

/// "num/den", or just "num" for integers.
std::string format_rational(const Rational& value);

}  // namespace sixcircles
