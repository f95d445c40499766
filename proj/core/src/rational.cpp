#include "rtd/rational.hpp"

#include <array>
#include <cctype>
#include <charconv>
#include <cmath>

#include "rtd/errors.hpp"

namespace rtd {

namespace {

using boost::multiprecision::cpp_int;

cpp_int pow10(long long e) {
  cpp_int r = 1;
  for (long long i = 0; i < e; ++i) r *= 10;
  return r;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::size_t i = 0;
  const std::size_t len = text.size();
  if (len == 0) throw ParseError("empty rational", 0);

  bool negative = false;
  if (text[i] == '+' || text[i] == '-') {
    negative = text[i] == '-';
    ++i;
  }

  cpp_int mantissa = 0;
  long long scale = 0;  // number of fractional digits
  bool digits = false;
  while (i < len && std::isdigit(static_cast<unsigned char>(text[i]))) {
    mantissa = mantissa * 10 + (text[i] - '0');
    digits = true;
    ++i;
  }

  if (i < len && text[i] == '/') {
    if (!digits) throw ParseError("missing numerator", i);
    ++i;
    cpp_int den = 0;
    bool den_digits = false;
    const std::size_t den_start = i;
    while (i < len && std::isdigit(static_cast<unsigned char>(text[i]))) {
      den = den * 10 + (text[i] - '0');
      den_digits = true;
      ++i;
    }
    if (!den_digits) throw ParseError("missing denominator", den_start);
    if (i != len) throw ParseError("trailing characters in rational", i);
    if (den == 0) throw ParseError("zero denominator", den_start);
    Rational r(mantissa, den);
    return negative ? Rational(-r) : r;
  }

  if (i < len && text[i] == '.') {
    ++i;
    while (i < len && std::isdigit(static_cast<unsigned char>(text[i]))) {
      mantissa = mantissa * 10 + (text[i] - '0');
      ++scale;
      digits = true;
      ++i;
    }
  }
  if (!digits) throw ParseError("expected digits", i);

  long long exponent = 0;
  if (i < len && (text[i] == 'e' || text[i] == 'E')) {
    ++i;
    bool exp_negative = false;
    if (i < len && (text[i] == '+' || text[i] == '-')) {
      exp_negative = text[i] == '-';
      ++i;
    }
    const std::size_t exp_start = i;
    while (i < len && std::isdigit(static_cast<unsigned char>(text[i]))) {
      exponent = exponent * 10 + (text[i] - '0');
      if (exponent > 4000) throw ParseError("exponent too large", exp_start);
      ++i;
    }
    if (i == exp_start) throw ParseError("missing exponent digits", exp_start);
    if (exp_negative) exponent = -exponent;
  }
  if (i != len) throw ParseError("trailing characters in rational", i);

  const long long shift = exponent - scale;
  Rational r = shift >= 0 ? Rational(mantissa * pow10(shift))
                          : Rational(mantissa, pow10(-shift));
  return negative ? Rational(-r) : r;
}

std::string to_fraction_string(const Rational& r) {
  const auto num = boost::multiprecision::numerator(r);
  const auto den = boost::multiprecision::denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

double to_double(const Rational& r) { return r.convert_to<double>(); }

std::string format_decimal(double value) {
  std::array<char, 64> buf{};
  auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value);
  if (ec != std::errc()) return "nan";
  return std::string(buf.data(), ptr);
}

long long floor_to_int(const Rational& r) {
  const cpp_int num = boost::multiprecision::numerator(r);
  const cpp_int den = boost::multiprecision::denominator(r);
  cpp_int q = num / den;  // truncates toward zero
  if (num < 0 && q * den != num) q -= 1;
  return q.convert_to<long long>();
}

long long ceil_to_int(const Rational& r) { return -floor_to_int(-r); }

}  // namespace rtd
