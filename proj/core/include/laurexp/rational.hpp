#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace laurexp {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Parses "7", "-3", "17/5". Throws std::invalid_argument otherwise.
Rational parse_rational(const std::string& text);

/// "17/5", or "3" when the denominator is 1.
std::string to_string(const Rational& r);

/// Decimal rendering rounded half-up to `digits` places, e.g. "2.800000".
std::string to_decimal(const Rational& r, int digits = 6);

BigInt floor(const Rational& r);
BigInt ceil(const Rational& r);
BigInt ipow(std::uint64_t base, std::uint64_t exp);

}  // namespace laurexp
