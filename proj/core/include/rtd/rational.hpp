#pragma once

#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace rtd {

// Exact arbitrary-precision rational.
using Rational = boost::multiprecision::cpp_rational;

// Parses "p/q", an integer, or a finite decimal such as "0.01" or "-1.5e-3"
// into an exact rational. Throws ParseError on malformed input.
Rational parse_rational(std::string_view text);

// "p/q" (or "p" when the denominator is 1).
std::string to_fraction_string(const Rational& r);

double to_double(const Rational& r);

// Shortest round-trip decimal rendering of a double, locale independent.
std::string format_decimal(double value);

// floor(r) and ceil(r) as 64-bit integers.
long long floor_to_int(const Rational& r);
long long ceil_to_int(const Rational& r);

}  // namespace rtd
