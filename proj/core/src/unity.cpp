#include "laurexp/unity.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace laurexp {

std::uint64_t multiplicative_order(std::uint64_t b, std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("multiplicative order modulo 0");
  if (n == 1) return 1;
  if (std::gcd(b, n) != 1) throw std::invalid_argument("base not invertible modulo n");
  std::uint64_t x = b % n;
  for (std::uint64_t t = 1; t <= n; ++t) {
    if (x == 1) return t;
    x = static_cast<std::uint64_t>((static_cast<unsigned __int128>(x) * b) % n);
  }
  throw std::logic_error("multiplicative order not found");
}

std::vector<std::vector<std::uint64_t>> cyclotomic_cosets(std::uint64_t n, std::uint64_t q) {
  std::vector<std::vector<std::uint64_t>> out;
  std::vector<bool> seen(n, false);
  for (std::uint64_t i = 0; i < n; ++i) {
    if (seen[i]) continue;
    std::vector<std::uint64_t> coset;
    std::uint64_t x = i;
    while (!seen[x]) {
      seen[x] = true;
      coset.push_back(x);
      x = static_cast<std::uint64_t>((static_cast<unsigned __int128>(x) * q) % n);
    }
    std::sort(coset.begin(), coset.end());
    out.push_back(std::move(coset));
  }
  return out;
}

namespace {

bool poly_less(const Polynomial& a, const Polynomial& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  const auto& x = a.coeffs();
  const auto& y = b.coeffs();
  return std::lexicographical_compare(x.rbegin(), x.rend(), y.rbegin(), y.rend());
}

// Basis of the null space of the n x n matrix A (row-major), as row vectors v
// with v * A = 0.
std::vector<std::vector<FieldElement>> left_null_space(std::vector<std::vector<FieldElement>> A,
                                                       const Field& F) {
  const std::size_t n = A.size();
  // Transpose so that we solve A^T x = 0.
  std::vector<std::vector<FieldElement>> M(n, std::vector<FieldElement>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) M[i][j] = A[j][i];
  std::vector<std::size_t> pivot_col;
  std::size_t row = 0;
  for (std::size_t col = 0; col < n && row < n; ++col) {
    std::size_t piv = row;
    while (piv < n && M[piv][col].code == 0) ++piv;
    if (piv == n) continue;
    std::swap(M[piv], M[row]);
    const FieldElement inv = F.inv(M[row][col]);
    for (auto& x : M[row]) x = F.mul(x, inv);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == row || M[r][col].code == 0) continue;
      const FieldElement f = M[r][col];
      for (std::size_t c = 0; c < n; ++c) M[r][c] = F.sub(M[r][c], F.mul(f, M[row][c]));
    }
    pivot_col.push_back(col);
    ++row;
  }
  std::vector<bool> is_pivot(n, false);
  for (auto c : pivot_col) is_pivot[c] = true;
  std::vector<std::vector<FieldElement>> basis;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    std::vector<FieldElement> v(n, F.zero());
    v[free] = F.one();
    for (std::size_t r = 0; r < pivot_col.size(); ++r) v[pivot_col[r]] = F.neg(M[r][free]);
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace

std::vector<Polynomial> factor_squarefree(const Polynomial& f) {
  if (f.degree() < 1) throw std::invalid_argument("factor_squarefree expects degree >= 1");
  const auto& field = f.field();
  const Field& F = *field;
  const Polynomial g = f.monic();
  const std::size_t n = static_cast<std::size_t>(g.degree());
  if (n == 1) return {g};

  // Berlekamp matrix: row i holds T^{iq} mod g.
  const Polynomial x = Polynomial::monomial(field, F.one(), 1);
  const Polynomial xq = pow_mod(x, F.order(), g);
  std::vector<std::vector<FieldElement>> B(n, std::vector<FieldElement>(n, F.zero()));
  Polynomial row = Polynomial::constant(field, F.one());
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) B[i][j] = row.coeff(j);
    B[i][i] = F.sub(B[i][i], F.one());
    row = (row * xq) % g;
  }
  const auto kernel = left_null_space(std::move(B), F);
  const std::size_t count = kernel.size();

  std::vector<Polynomial> factors{g};
  for (const auto& v : kernel) {
    if (factors.size() == count) break;
    const Polynomial gv(field, v);
    if (gv.degree() < 1) continue;
    std::vector<Polynomial> next;
    for (const auto& h : factors) {
      if (h.degree() == 1) {
        next.push_back(h);
        continue;
      }
      Polynomial rest = h;
      for (std::uint64_t c = 0; c < F.order() && rest.degree() >= 1; ++c) {
        const Polynomial shifted = gv - Polynomial::constant(field, {static_cast<std::uint32_t>(c)});
        Polynomial d = poly_gcd(rest, shifted);
        if (d.degree() >= 1) {
          rest = rest / d;
          next.push_back(std::move(d));
        }
      }
      if (rest.degree() >= 1) next.push_back(rest.monic());
    }
    factors = std::move(next);
  }
  if (factors.size() != count)
    throw std::logic_error("Berlekamp splitting did not separate all factors");
  std::sort(factors.begin(), factors.end(), poly_less);
  return factors;
}

UnityRootPlan unity_root_plan(std::uint64_t period, const FieldRef& field, std::uint64_t base) {
  if (period == 0) throw std::invalid_argument("repetition period must be >= 1");
  const std::uint64_t p = field->characteristic();
  if (!is_power_of(base, p))
    throw std::invalid_argument("morphism base " + std::to_string(base) +
                                " is not a power of the characteristic " + std::to_string(p));
  UnityRootPlan plan;
  plan.period = period;
  std::uint64_t lp = period;
  while (lp % p == 0) {
    lp /= p;
    ++plan.p_valuation;
  }
  plan.coprime_part = lp;
  plan.base_order = multiplicative_order(base, lp);
  plan.factors = factor_squarefree(Polynomial::x_pow_minus_one(field, lp));
  return plan;
}

Polynomial quotient_eval(const Polynomial& P, const Polynomial& h) {
  if (h.degree() < 1) throw std::invalid_argument("quotient_eval: modulus must be nonconstant");
  return P % h;
}

QuotientRing::QuotientRing(Polynomial modulus) : h_(modulus.monic()) {
  if (h_.degree() < 1) throw std::invalid_argument("quotient ring modulus must be nonconstant");
}

Polynomial QuotientRing::one() const {
  return reduce(Polynomial::constant(field(), field()->one()));
}

Polynomial QuotientRing::evaluate(const Polynomial& P, const Polynomial& x) const {
  Polynomial acc = zero();
  const auto& c = P.coeffs();
  for (std::size_t i = c.size(); i-- > 0;)
    acc = mul(acc, x) + Polynomial::constant(field(), c[i]);
  return acc;
}

std::vector<std::uint32_t> QuotientRing::key(const Polynomial& a) const {
  std::vector<std::uint32_t> k(dimension(), 0);
  for (std::size_t i = 0; i < a.coeffs().size() && i < k.size(); ++i) k[i] = a.coeffs()[i].code;
  return k;
}

}  // namespace laurexp
