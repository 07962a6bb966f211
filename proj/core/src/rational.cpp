#include "laurexp/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace laurexp {

namespace {

BigInt parse_int(const std::string& s) {
  std::size_t i = 0;
  if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
  if (i == s.size()) throw std::invalid_argument("not a rational: '" + s + "'");
  for (std::size_t j = i; j < s.size(); ++j)
    if (!std::isdigit(static_cast<unsigned char>(s[j])))
      throw std::invalid_argument("not a rational: '" + s + "'");
  return BigInt(s);
}

}  // namespace

Rational parse_rational(const std::string& text) {
  const auto slash = text.find('/');
  if (slash == std::string::npos) return Rational(parse_int(text));
  const BigInt num = parse_int(text.substr(0, slash));
  const BigInt den = parse_int(text.substr(slash + 1));
  if (den == 0) throw std::invalid_argument("zero denominator in '" + text + "'");
  return Rational(num, den);
}

std::string to_string(const Rational& r) {
  const BigInt num = boost::multiprecision::numerator(r);
  const BigInt den = boost::multiprecision::denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

BigInt floor(const Rational& r) {
  const BigInt num = boost::multiprecision::numerator(r);
  const BigInt den = boost::multiprecision::denominator(r);
  BigInt q = num / den;
  if (num % den != 0 && num < 0) q -= 1;
  return q;
}

BigInt ceil(const Rational& r) { return -floor(-r); }

BigInt ipow(std::uint64_t base, std::uint64_t exp) {
  BigInt acc = 1;
  BigInt b = base;
  while (exp) {
    if (exp & 1) acc *= b;
    b *= b;
    exp >>= 1;
  }
  return acc;
}

std::string to_decimal(const Rational& r, int digits) {
  const BigInt scale = ipow(10, static_cast<std::uint64_t>(digits));
  const bool negative = r < 0;
  const Rational a = negative ? Rational(-r) : r;
  const BigInt scaled = floor(a * scale + Rational(1, 2));
  const BigInt whole = BigInt(scaled / scale);
  std::string frac = BigInt(scaled % scale).str();
  if (digits > 0) frac = std::string(static_cast<std::size_t>(digits) - frac.size(), '0') + frac;
  std::string out = (negative && scaled != 0 ? "-" : "") + whole.str();
  if (digits > 0) out += "." + frac;
  return out;
}

}  // namespace laurexp
