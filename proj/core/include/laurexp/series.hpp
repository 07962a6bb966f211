#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "laurexp/polynomial.hpp"
#include "laurexp/words.hpp"

namespace laurexp {

/// Precision marker for series known exactly (finite Laurent polynomials).
inline constexpr std::int64_t kExactPrecision = std::int64_t{1} << 60;

/// Truncated series sum_i c_i T^{-i} over F_q. Index i is the exponent of
/// 1/T and may be negative. Coefficients are known for i < end(); those below
/// start() are zero.
class LaurentSeries {
 public:
  /// The zero series known to precision `end`.
  LaurentSeries(FieldRef field, std::int64_t end);
  LaurentSeries(FieldRef field, std::int64_t start, std::vector<FieldElement> coeffs, std::int64_t end);

  /// a_0 + a_1 T^-1 + ..., known for the given terms.
  static LaurentSeries from_sequence(FieldRef field, const CodedWord& terms);
  /// A polynomial in T, known exactly.
  static LaurentSeries from_polynomial(const Polynomial& p);

  const FieldRef& field() const { return field_; }
  std::int64_t start() const { return start_; }
  std::int64_t end() const { return end_; }
  bool exact() const { return end_ >= kExactPrecision; }
  /// One past the last stored coefficient; everything from here to end() is zero.
  std::int64_t stored_end() const { return start_ + static_cast<std::int64_t>(coeffs_.size()); }
  /// Coefficient of T^{-i}; throws std::out_of_range when i >= end().
  FieldElement coeff(std::int64_t i) const;
  /// First index with a nonzero coefficient, or end() when none is known.
  std::int64_t valuation() const;
  bool known_zero() const { return valuation() >= end_; }

  /// Same series known only for indices < end.
  LaurentSeries truncated(std::int64_t end) const;

  friend LaurentSeries operator+(const LaurentSeries& a, const LaurentSeries& b);
  friend LaurentSeries operator-(const LaurentSeries& a, const LaurentSeries& b);
  /// Known for indices < min(end_a + v_b, end_b + v_a).
  friend LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b);
  LaurentSeries pow(std::uint64_t e) const;

  /// "T^-3 + T^-7 + ... + O(T^-20)".
  std::string to_string(std::size_t max_terms = 12) const;

 private:
  void trim();

  FieldRef field_;
  std::int64_t start_;
  std::vector<FieldElement> coeffs_;  // indices start_ .. start_ + size - 1; zero beyond
  std::int64_t end_;
};

struct RationalFunction {
  Polynomial numerator;
  Polynomial denominator;  // nonzero

  /// Divides out the gcd and makes the denominator monic.
  RationalFunction reduced() const;
  /// deg numerator - deg denominator (kDegreeNegInf for zero).
  std::int64_t degree() const;
};

/// Expansion at T = infinity, with coefficients known for indices < N.
/// Throws std::domain_error on a zero denominator.
LaurentSeries expand_rational(const RationalFunction& r, std::int64_t N);

/// The unreduced fraction with expansion U V^inf: for k = |U| >= 1,
/// (P_U (T^l - 1) + P_V) / (T^{k-1} (T^l - 1)); for k = 0, T P_V / (T^l - 1).
RationalFunction word_to_rational(const FieldRef& field, const CodedWord& U, const CodedWord& V);

/// Exponent of |T| for an ultrametric absolute value; kDegreeNegInf for zero.
/// `bounded` marks "at most exponent" when no difference was visible.
struct DegreeValue {
  std::int64_t exponent = kDegreeNegInf;
  bool bounded = false;

  std::string to_string() const;
  friend bool operator==(const DegreeValue&, const DegreeValue&) = default;
};

/// |f - g| as -(first differing index), or bounded by -precision when the
/// known parts coincide.
DegreeValue distance_degree(const LaurentSeries& f, const LaurentSeries& g);

class InsufficientPrecision : public std::runtime_error {
 public:
  InsufficientPrecision(std::int64_t required, const std::string& what)
      : std::runtime_error(what), required_(required) {}
  /// Precision of f that would have sufficed.
  std::int64_t required() const { return required_; }

 private:
  std::int64_t required_;
};

struct AlgebraicVerdict {
  bool consistent = true;
  std::optional<std::int64_t> first_offending_index;
  std::int64_t checked_through = 0;  // every index <= this was checked
};

/// Checks sum_i c_i(T) f^i = 0 at every index <= depth. Throws
/// InsufficientPrecision when f is not known far enough to see that index.
AlgebraicVerdict verify_algebraic(const LaurentSeries& f, const std::vector<Polynomial>& equation,
                                  std::int64_t depth);

/// Solves X = sum_i g_i X^i by iteration from X = 0, to N known coefficients.
/// Throws std::invalid_argument when an iteration fails to gain valuation.
LaurentSeries fixed_point_solve(const std::vector<RationalFunction>& map, std::int64_t N);

}  // namespace laurexp
