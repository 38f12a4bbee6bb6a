#include "gdeutsch/rational.hpp"

#include <cmath>
#include <cstdio>
#include <limits>

#include "gdeutsch/errors.hpp"

namespace gdeutsch {

namespace mp = boost::multiprecision;

BigInt big_pow(std::uint64_t base, std::uint64_t exponent) {
  BigInt result = 1;
  BigInt b = base;
  while (exponent > 0) {
    if (exponent & 1U) result *= b;
    exponent >>= 1U;
    if (exponent > 0) b *= b;
  }
  return result;
}

namespace {

BigInt pow_big(BigInt base, std::uint64_t exponent) {
  BigInt result = 1;
  while (exponent > 0) {
    if (exponent & 1U) result *= base;
    exponent >>= 1U;
    if (exponent > 0) base *= base;
  }
  return result;
}

}  // namespace

Rational rational_pow(const Rational& r, std::uint64_t k) {
  return Rational(pow_big(mp::numerator(r), k), pow_big(mp::denominator(r), k));
}

double to_double(const Rational& r) {
  if (r == 0) return 0.0;
  BigInt num = mp::numerator(r);
  const BigInt den = mp::denominator(r);
  const bool negative = num < 0;
  if (negative) num = -num;

  // Scale so the integer quotient carries 64 significant bits.
  const long shift = 64 - (static_cast<long>(mp::msb(num)) - static_cast<long>(mp::msb(den)));
  BigInt q = shift >= 0 ? BigInt((num << shift) / den) : BigInt(num / (den << -shift));
  long exponent = -shift;
  while (mp::msb(q) >= 64) {
    q >>= 1;
    ++exponent;
  }
  const double mantissa = static_cast<double>(q.convert_to<std::uint64_t>());
  const double v = std::ldexp(mantissa, static_cast<int>(exponent));
  return negative ? -v : v;
}

Rational from_double(double v) {
  if (!std::isfinite(v)) throw InvalidArgument("from_double: value is not finite");
  if (v == 0.0) return Rational(0);
  int exponent = 0;
  const double fraction = std::frexp(v, &exponent);
  // fraction * 2^53 is an integer for every finite double.
  const auto mantissa = static_cast<std::int64_t>(std::ldexp(fraction, 53));
  exponent -= 53;
  Rational result{BigInt(mantissa)};
  if (exponent > 0) {
    result *= Rational(BigInt(1) << exponent);
  } else if (exponent < 0) {
    result /= Rational(BigInt(1) << -exponent);
  }
  return result;
}

std::string format_significant(double v, int digits) {
  char buffer[64];
  std::snprintf(buffer, sizeof buffer, "%.*g", digits, v);
  return buffer;
}

std::string to_string(const BigInt& v) { return v.str(); }

}  // namespace gdeutsch
