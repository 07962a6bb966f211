#pragma once

#include <cstdint>
#include <vector>

#include "laurexp/polynomial.hpp"

namespace laurexp {

/// Bookkeeping for the l-th roots of unity over F_q.
///
/// Evaluating a polynomial with coefficients in F_q at every l-th root of unity
/// is equivalent to reducing it modulo each entry of `factors`.
struct UnityRootPlan {
  std::uint64_t period = 1;         // l
  std::uint64_t coprime_part = 1;   // l' (l with all factors p removed)
  std::uint32_t p_valuation = 0;    // v, l = l' * p^v
  std::uint64_t base_order = 1;     // t, multiplicative order of b mod l'
  std::vector<Polynomial> factors;  // distinct monic irreducible factors of T^l' - 1
};

/// Throws std::invalid_argument when b is not a power of the characteristic or l == 0.
UnityRootPlan unity_root_plan(std::uint64_t period, const FieldRef& field, std::uint64_t base);

/// P mod h. Throws std::invalid_argument when h is constant.
Polynomial quotient_eval(const Polynomial& P, const Polynomial& h);

/// Monic irreducible factors of a squarefree polynomial (Berlekamp), sorted by
/// degree then coefficients.
std::vector<Polynomial> factor_squarefree(const Polynomial& f);

/// Orbits of i -> i*q on Z/nZ, each sorted, in order of smallest element.
std::vector<std::vector<std::uint64_t>> cyclotomic_cosets(std::uint64_t n, std::uint64_t q);

/// Smallest t >= 1 with b^t = 1 (mod n); 1 when n == 1.
std::uint64_t multiplicative_order(std::uint64_t b, std::uint64_t n);

/// F_q[T]/(h) for a nonconstant monic h. Elements are reduced Polynomials.
class QuotientRing {
 public:
  explicit QuotientRing(Polynomial modulus);

  const Polynomial& modulus() const { return h_; }
  const FieldRef& field() const { return h_.field(); }
  std::size_t dimension() const { return static_cast<std::size_t>(h_.degree()); }

  Polynomial zero() const { return Polynomial(field()); }
  Polynomial one() const;
  /// The residue class of T.
  Polynomial generator() const { return reduce(Polynomial::monomial(field(), field()->one(), 1)); }
  Polynomial reduce(const Polynomial& a) const { return a % h_; }
  Polynomial add(const Polynomial& a, const Polynomial& b) const { return a + b; }
  Polynomial mul(const Polynomial& a, const Polynomial& b) const { return (a * b) % h_; }
  Polynomial pow(const Polynomial& a, std::uint64_t e) const { return pow_mod(a, e, h_); }
  /// P evaluated at the residue x (Horner in the quotient ring).
  Polynomial evaluate(const Polynomial& P, const Polynomial& x) const;
  /// Fixed-length coordinate vector; equal residues give equal keys.
  std::vector<std::uint32_t> key(const Polynomial& a) const;

 private:
  Polynomial h_;
};

}  // namespace laurexp
