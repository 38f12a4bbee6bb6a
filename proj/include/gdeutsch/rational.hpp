#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace gdeutsch {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

BigInt big_pow(std::uint64_t base, std::uint64_t exponent);

/// r^k, computed on numerator and denominator separately (stays reduced).
Rational rational_pow(const Rational& r, std::uint64_t k);

/// Nearest double to r; correct to within one ulp, never overflows for the
/// magnitudes this library produces.
double to_double(const Rational& r);

/// Exact conversion of a finite double (every double is a dyadic rational).
Rational from_double(double v);

/// printf("%.*g") rendering used at every output boundary.
std::string format_significant(double v, int digits);

std::string to_string(const BigInt& v);

}  // namespace gdeutsch
