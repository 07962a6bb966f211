#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "laurexp/polynomial.hpp"
#include "laurexp/repetition.hpp"
#include "laurexp/unity.hpp"
#include "laurexp/words.hpp"

namespace laurexp {

/// P_W(T) = sum_j w_{|W|-1-j} T^j: the last letter is the constant term.
Polynomial word_poly(const FieldRef& field, const CodedWord& w);

/// Entry j collects T^pos for every occurrence of letter j, with positions
/// counted from the rightmost letter (position 0).
using OccurrenceVector = std::vector<Polynomial>;

OccurrenceVector occurrence_vector(const FieldRef& field, const Word& w, std::size_t alphabet_size);

/// Dense matrix of polynomials, row-major.
class PolyMatrix {
 public:
  PolyMatrix(FieldRef field, std::size_t rows, std::size_t cols);
  static PolyMatrix identity(FieldRef field, std::size_t n);
  static PolyMatrix column(FieldRef field, const std::vector<Polynomial>& entries);

  const FieldRef& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Polynomial& at(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  const Polynomial& at(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

  /// Substitute T -> T^k in every entry.
  PolyMatrix compose_power(std::size_t k) const;
  /// Entrywise evaluation at an element of F_q; the result has constant entries.
  PolyMatrix evaluate(FieldElement c) const;
  /// Entrywise evaluation at a residue of F_q[T]/(h).
  PolyMatrix evaluate(const QuotientRing& ring, const Polynomial& x) const;

  friend PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b);
  friend bool operator==(const PolyMatrix& a, const PolyMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
  }

  std::string to_string() const;

 private:
  FieldRef field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Polynomial> entries_;
};

/// a * b with entries reduced modulo the ring's modulus.
PolyMatrix multiply(const QuotientRing& ring, const PolyMatrix& a, const PolyMatrix& b);
PolyMatrix matrix_power(const QuotientRing& ring, PolyMatrix a, std::uint64_t e);
/// Plain power over F_q[T] (or over F_q for constant matrices).
PolyMatrix matrix_power(PolyMatrix a, std::uint64_t e);

/// M_sigma(T): row i is the occurrence vector of sigma(i).
PolyMatrix morphism_matrix(const FieldRef& field, const UniformMorphism& sigma);
/// Same for arbitrary (possibly non-uniform) images over A_m.
PolyMatrix morphism_matrix(const FieldRef& field, std::size_t alphabet_size,
                           const std::vector<Word>& images);

/// R_n(T): entry i is P_{phi(sigma^n(i))}, computed as
/// M_sigma(T^{b^{n-1}}) ... M_sigma(T) (phi(0), ..., phi(m-1))^T.
std::vector<Polynomial> r_vector(const UniformMorphism& sigma, const Coding& coding, std::size_t n);

/// Smallest t >= 1 with x^{b^t} = x for x = T mod h. Throws BudgetExceeded past `cap`.
std::uint64_t frobenius_order(const QuotientRing& ring, std::uint64_t base, std::uint64_t cap = 1u << 20);

/// Evaluation of P_{phi(sigma^n(W))} modulo an irreducible h, without expanding
/// sigma^n(W). Caches M_{sigma^r}(x) for r < t and powers of M_{sigma^t}(x).
class IterateEvaluator {
 public:
  IterateEvaluator(const UniformMorphism& sigma, const Coding& coding, Polynomial h);

  const QuotientRing& ring() const { return ring_; }
  std::uint64_t order() const { return t_; }
  /// M_{sigma^t}(x).
  const PolyMatrix& cycle_matrix() const { return cycle_; }
  /// M_{sigma^n}(x) = M_{sigma^r}(x) (M_{sigma^t}(x))^q for n = q t + r.
  PolyMatrix iterate_matrix(std::uint64_t n) const;
  /// v_W(x^{b^n}) M_{sigma^n}(x) phi.
  Polynomial value(const Word& w, std::uint64_t n) const;
  /// Same, with the matrix M_{sigma^n}(x) supplied.
  Polynomial value(const Word& w, std::uint64_t n, const PolyMatrix& iterate) const;

 private:
  std::size_t m_;
  std::uint64_t b_;
  QuotientRing ring_;
  std::uint64_t t_;
  PolyMatrix base_matrix_;
  std::vector<Polynomial> x_powers_;  // x^{b^r}, r < t
  std::vector<PolyMatrix> partial_;   // M_{sigma^r}(x), r <= t
  PolyMatrix cycle_;
  PolyMatrix coding_column_;
};

/// P_{phi(sigma^n(W))} mod h.
Polynomial iterate_value(const UniformMorphism& sigma, const Coding& coding, const Word& w,
                         std::uint64_t n, const Polynomial& h);

/// The value sequence is v_0 .. v_{preperiod + period - 1}, then repeats with
/// `period`. Both are minimal. The matrix fields describe (M_{sigma^t}(x)^j)_j.
struct PeriodicityCertificate {
  Polynomial factor;
  std::uint64_t order = 1;  // t
  std::uint64_t preperiod = 0;
  std::uint64_t period = 1;
  std::vector<Polynomial> values{};
  std::uint64_t matrix_preperiod = 0;
  std::uint64_t matrix_period = 1;

  /// v_n for any n.
  const Polynomial& value_at(std::uint64_t n) const;
  bool never_zero() const;
  /// Smallest n with v_n = 0.
  std::optional<std::uint64_t> first_zero() const;
};

/// Cycle detection on the powers of M_{sigma^t}(x). Throws BudgetExceeded when
/// no repeat shows up within `max_powers` powers.
PeriodicityCertificate periodicity_certificate(const UniformMorphism& sigma, const Coding& coding,
                                               const Word& w, const Polynomial& h,
                                               std::uint64_t max_powers = 1u << 20);

/// Orbits of the last letters of U and V under lambda(c) = last letter of sigma(c).
struct LastLetterRecord {
  std::uint64_t preperiod = 0;
  std::uint64_t period = 1;
  std::vector<FieldElement> u_values;  // phi(lambda^n(last U)), n < preperiod + period
  std::vector<FieldElement> v_values;

  /// phi(lambda^n(last U)) != phi(lambda^n(last V)).
  bool distinct_at(std::uint64_t n) const;
};

enum class CoprimeVerdict { all_n, from_n, fails_at };

std::string to_string(CoprimeVerdict v);

/// gcd(P_n, Q_n) = 1 for the approximants built from a witness, decided over
/// n >= 1 from eventually periodic data.
struct CoprimalityCertificate {
  std::uint64_t k = 0;
  std::uint64_t base = 2;
  UnityRootPlan plan;
  std::vector<PeriodicityCertificate> factors;
  std::optional<LastLetterRecord> last_letters;  // present when k > 0
  CoprimeVerdict verdict = CoprimeVerdict::all_n;
  /// from_n: first level of the coprime tail; fails_at: first failing level >= 1.
  std::uint64_t level = 1;

  /// Condition on the roots of T^l' - 1 at level n.
  bool roots_ok_at(std::uint64_t n) const;
  /// Condition at T = 0 at level n (vacuous when k b^n - 1 < 1).
  bool origin_ok_at(std::uint64_t n) const;
  bool coprime_at(std::uint64_t n) const { return roots_ok_at(n) && origin_ok_at(n); }
  bool coprime_for_all_n() const { return verdict == CoprimeVerdict::all_n; }
};

CoprimalityCertificate coprimality_check(const UniformMorphism& sigma, const Coding& coding,
                                         const RepetitionWitness& w, const UnityRootPlan& plan);

}  // namespace laurexp
