#include <gtest/gtest.h>

#include <random>
#include <set>

#include "laurexp/field.hpp"
#include "laurexp/polynomial.hpp"
#include "laurexp/unity.hpp"
#include "oracles.hpp"

using namespace laurexp;

namespace {

Polynomial P(const FieldRef& f, std::initializer_list<std::int64_t> c) { return Polynomial::from_ints(f, c); }

}  // namespace

TEST(Field, PrimeArithmetic) {
  const auto F = Field::prime(5);
  EXPECT_EQ(F->add(F->from_int(3), F->from_int(4)), F->from_int(2));
  EXPECT_EQ(F->mul(F->from_int(3), F->from_int(4)), F->from_int(2));
  EXPECT_EQ(F->from_int(-1), F->from_int(4));
  for (std::int64_t a = 1; a < 5; ++a) EXPECT_EQ(F->mul(F->from_int(a), F->inv(F->from_int(a))), F->one());
  EXPECT_THROW(F->inv(F->zero()), std::domain_error);
  EXPECT_THROW(Field::prime(6), std::invalid_argument);
}

TEST(Field, ExtensionField) {
  const auto F4 = Field::extension(2, {1, 1, 1});
  EXPECT_EQ(F4->order(), 4u);
  for (std::uint32_t a = 1; a < 4; ++a) {
    const FieldElement x{a};
    EXPECT_EQ(F4->mul(x, F4->inv(x)), F4->one());
    EXPECT_EQ(F4->pow(x, 3), F4->one());
  }
  EXPECT_THROW(Field::extension(2, {1, 0, 1}), std::invalid_argument);  // y^2 + 1 = (y+1)^2
}

TEST(PolyGcd, Examples) {
  const auto F2 = Field::prime(2);
  EXPECT_EQ(poly_gcd(P(F2, {1, 0, 1}), P(F2, {1, 1})), P(F2, {1, 1}));
  const auto F5 = Field::prime(5);
  const Polynomial a = P(F5, {3, 0, 2, 4});
  EXPECT_EQ(poly_gcd(a, Polynomial(F5)), a.monic());
  EXPECT_EQ(poly_gcd(P(F5, {-1, 0, 0, 1}), P(F5, {-1, 0, 1})), P(F5, {-1, 1}));
}

TEST(PolyGcd, MismatchedFields) {
  EXPECT_THROW(poly_gcd(P(Field::prime(2), {1, 1}), P(Field::prime(3), {1, 1})), std::invalid_argument);
}

TEST(PolyGcd, DividesBothAndIsGreatest) {
  std::mt19937_64 rng(7);
  for (const std::uint32_t p : {2u, 3u, 5u}) {
    const auto F = Field::prime(p);
    for (int iter = 0; iter < 200; ++iter) {
      const Polynomial d = oracle::random_poly(rng, F, 4);
      const Polynomial a = d * oracle::random_poly(rng, F, 6);
      const Polynomial b = d * oracle::random_poly(rng, F, 6);
      const Polynomial g = poly_gcd(a, b);
      if (a.is_zero() && b.is_zero()) {
        EXPECT_TRUE(g.is_zero());
        continue;
      }
      EXPECT_TRUE(g.is_monic());
      EXPECT_TRUE((a % g).is_zero());
      EXPECT_TRUE((b % g).is_zero());
      if (!d.is_zero()) {
        EXPECT_TRUE((g % d).is_zero()) << "common divisor " << d.to_string() << " of gcd " << g.to_string();
      }
    }
  }
}

TEST(UnityRootPlan, Examples) {
  const auto F3 = Field::prime(3);
  const UnityRootPlan a = unity_root_plan(6, F3, 3);
  EXPECT_EQ(a.coprime_part, 2u);
  EXPECT_EQ(a.p_valuation, 1u);
  EXPECT_EQ(a.base_order, 1u);
  ASSERT_EQ(a.factors.size(), 2u);
  EXPECT_EQ(a.factors[0], P(F3, {1, 1}));
  EXPECT_EQ(a.factors[1], P(F3, {-1, 1}));

  const UnityRootPlan b = unity_root_plan(5, Field::prime(5), 5);
  EXPECT_EQ(b.coprime_part, 1u);
  EXPECT_EQ(b.p_valuation, 1u);
  EXPECT_EQ(b.base_order, 1u);
  ASSERT_EQ(b.factors.size(), 1u);
  EXPECT_EQ(b.factors[0], P(Field::prime(5), {-1, 1}));

  const auto F2 = Field::prime(2);
  const UnityRootPlan c = unity_root_plan(1, F2, 4);
  EXPECT_EQ(c.coprime_part, 1u);
  EXPECT_EQ(c.p_valuation, 0u);
  EXPECT_EQ(c.base_order, 1u);
  ASSERT_EQ(c.factors.size(), 1u);
  EXPECT_EQ(c.factors[0], P(F2, {1, 1}));
}

TEST(UnityRootPlan, Errors) {
  EXPECT_THROW(unity_root_plan(4, Field::prime(3), 4), std::invalid_argument);
  EXPECT_THROW(unity_root_plan(0, Field::prime(3), 3), std::invalid_argument);
}

TEST(UnityRootPlan, Invariants) {
  for (const std::uint32_t p : {2u, 3u, 5u}) {
    const auto F = Field::prime(p);
    for (const std::uint64_t b : {std::uint64_t{p}, std::uint64_t{p} * p}) {
      for (std::uint64_t ell = 1; ell <= 40; ++ell) {
        const UnityRootPlan plan = unity_root_plan(ell, F, b);
        std::uint64_t pv = 1;
        for (std::uint32_t i = 0; i < plan.p_valuation; ++i) pv *= p;
        EXPECT_EQ(plan.coprime_part * pv, ell);
        EXPECT_NE(plan.coprime_part % p, 0u);
        std::uint64_t acc = 1 % plan.coprime_part;
        std::uint64_t t = 0;
        do {
          acc = acc * (b % plan.coprime_part) % plan.coprime_part;
          ++t;
        } while (acc != 1 % plan.coprime_part);
        EXPECT_EQ(plan.base_order, t) << "l=" << ell << " b=" << b;
        Polynomial prod = P(F, {1});
        bool has_t_minus_1 = false;
        for (const auto& h : plan.factors) {
          prod *= h;
          has_t_minus_1 = has_t_minus_1 || h == P(F, {-1, 1});
        }
        EXPECT_EQ(prod, Polynomial::x_pow_minus_one(F, plan.coprime_part)) << "l=" << ell;
        EXPECT_TRUE(has_t_minus_1);
      }
    }
  }
}

TEST(UnityRootPlan, FactorsMatchCyclotomicCosets) {
  for (const std::uint32_t p : {2u, 3u, 5u}) {
    const auto F = Field::prime(p);
    for (std::uint64_t n = 1; n <= 30; ++n) {
      if (n % p == 0) continue;
      const auto factors = factor_squarefree(Polynomial::x_pow_minus_one(F, n));
      const auto cosets = cyclotomic_cosets(n, p);
      ASSERT_EQ(factors.size(), cosets.size()) << "n=" << n << " p=" << p;
      std::multiset<std::int64_t> dg;
      std::multiset<std::int64_t> cs;
      for (const auto& f : factors) dg.insert(f.degree());
      for (const auto& c : cosets) cs.insert(static_cast<std::int64_t>(c.size()));
      EXPECT_EQ(dg, cs);
    }
  }
}

TEST(QuotientEval, Examples) {
  const auto F3 = Field::prime(3);
  EXPECT_TRUE(quotient_eval(P(F3, {-1, 0, 1}), P(F3, {-1, 1})).is_zero());
  const auto F2 = Field::prime(2);
  EXPECT_EQ(quotient_eval(P(F2, {1, 1, 1}), P(F2, {1, 1})), P(F2, {1}));
  const auto F5 = Field::prime(5);
  EXPECT_EQ(quotient_eval(P(F5, {0, 1, 3, 0, 2, 0, 1}), P(F5, {-1, 1})), P(F5, {2}));
  EXPECT_THROW(quotient_eval(P(F5, {1, 1}), P(F5, {3})), std::invalid_argument);
}

TEST(QuotientEval, IgnoresMultiplesOfModulus) {
  std::mt19937_64 rng(11);
  for (const std::uint32_t p : {2u, 3u, 5u}) {
    const auto F = Field::prime(p);
    for (int iter = 0; iter < 100; ++iter) {
      Polynomial h = oracle::random_poly(rng, F, 5);
      if (h.degree() < 1) continue;
      h = h.monic();
      const Polynomial Pp = oracle::random_poly(rng, F, 8);
      const Polynomial R = oracle::random_poly(rng, F, 8);
      EXPECT_EQ(quotient_eval(Pp * h + R, h), quotient_eval(R, h));
    }
  }
}

TEST(QuotientRing, FrobeniusFixesPrimeSubfieldRoots) {
  const auto F5 = Field::prime(5);
  const QuotientRing ring(P(F5, {-1, 1}));
  const Polynomial x = ring.generator();
  EXPECT_EQ(ring.pow(x, 5), x);
  EXPECT_EQ(ring.evaluate(P(F5, {1, 2, 3}), x), P(F5, {1}));
}
