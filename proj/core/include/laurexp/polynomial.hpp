#pragma once

#include <cstdint>
#include <initializer_list>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "laurexp/field.hpp"

namespace laurexp {

/// Degree of the zero polynomial.
inline constexpr std::int64_t kDegreeNegInf = std::numeric_limits<std::int64_t>::min();

/// Dense univariate polynomial over F_q, lowest degree first, kept in normal
/// form (no trailing zero coefficient). Binary operations throw
/// std::invalid_argument when the operands live over different fields.
class Polynomial {
 public:
  explicit Polynomial(FieldRef field);
  Polynomial(FieldRef field, std::vector<FieldElement> coeffs);

  /// Coefficients given as prime-subfield integers, lowest degree first.
  static Polynomial from_ints(FieldRef field, std::initializer_list<std::int64_t> coeffs);
  static Polynomial from_ints(FieldRef field, const std::vector<std::int64_t>& coeffs);
  static Polynomial constant(FieldRef field, FieldElement c);
  /// c * T^k
  static Polynomial monomial(FieldRef field, FieldElement c, std::size_t k);
  /// T^n - 1
  static Polynomial x_pow_minus_one(FieldRef field, std::size_t n);

  const FieldRef& field() const { return field_; }
  const std::vector<FieldElement>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  /// kDegreeNegInf for the zero polynomial.
  std::int64_t degree() const;
  FieldElement coeff(std::size_t k) const;
  FieldElement leading() const;
  bool is_monic() const { return !is_zero() && leading() == field_->one(); }

  Polynomial operator-() const;
  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  Polynomial& operator+=(const Polynomial& b) { return *this = *this + b; }
  Polynomial& operator-=(const Polynomial& b) { return *this = *this - b; }
  Polynomial& operator*=(const Polynomial& b) { return *this = *this * b; }

  Polynomial scaled(FieldElement c) const;
  /// Multiply by T^k.
  Polynomial shifted(std::size_t k) const;
  /// Substitute T -> T^k.
  Polynomial compose_power(std::size_t k) const;
  Polynomial monic() const;
  FieldElement eval(FieldElement x) const;

  /// Quotient and remainder; throws std::domain_error on division by zero.
  std::pair<Polynomial, Polynomial> divmod(const Polynomial& d) const;
  Polynomial operator%(const Polynomial& d) const { return divmod(d).second; }
  Polynomial operator/(const Polynomial& d) const { return divmod(d).first; }

  /// e.g. "T^6 + 2T^4 + 3T + 1"; "0" for zero.
  std::string to_string() const;

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return *a.field_ == *b.field_ && a.coeffs_ == b.coeffs_;
  }

 private:
  void normalize();

  FieldRef field_;
  std::vector<FieldElement> coeffs_;
};

void require_same_field(const Polynomial& a, const Polynomial& b);

/// Monic greatest common divisor; gcd(a, 0) = monic(a) and gcd(0, 0) = 0.
Polynomial poly_gcd(Polynomial a, Polynomial b);

/// a^e mod m.
Polynomial pow_mod(const Polynomial& a, std::uint64_t e, const Polynomial& m);

}  // namespace laurexp
