#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <optional>
#include <string>

namespace theta {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Parses "3", "-3", "3/4", "-3/4". Throws UsageError on anything else.
Rational parse_rational(const std::string& text);

// "p/q" with q omitted when q == 1.
std::string rational_to_string(const Rational& value);

// Exact square root when the argument is a perfect square of a rational.
std::optional<Rational> exact_sqrt(const Rational& value);

}  // namespace theta
