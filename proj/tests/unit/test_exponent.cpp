#include <gtest/gtest.h>

#include "laurexp/bounds.hpp"
#include "laurexp/rational.hpp"

using namespace laurexp;

TEST(RationalText, ParseAndFormat) {
  EXPECT_EQ(parse_rational("17/5"), Rational(17, 5));
  EXPECT_EQ(parse_rational("-3"), Rational(-3));
  EXPECT_EQ(to_string(Rational(14, 5)), "14/5");
  EXPECT_EQ(to_string(Rational(6, 2)), "3");
  EXPECT_EQ(to_decimal(Rational(14, 5)), "2.800000");
  EXPECT_EQ(to_decimal(Rational(85, 12)), "7.083333");
  EXPECT_EQ(to_decimal(Rational(2, 3)), "0.666667");
  EXPECT_THROW(parse_rational("1/0"), std::invalid_argument);
  EXPECT_THROW(parse_rational("x"), std::invalid_argument);
}

TEST(ApproximationBounds, Examples) {
  const auto a = approximation_bounds(2, 2, 4, true);
  ASSERT_TRUE(a.exact);
  EXPECT_EQ(*a.exact, Rational(3));

  const auto b = approximation_bounds(Rational(5, 3), Rational(5, 3), 3, false);
  EXPECT_EQ(b.lower, Rational(8, 3));
  EXPECT_EQ(b.upper, Rational(24, 5));
  EXPECT_FALSE(b.exact);

  const auto c = approximation_bounds(Rational(5, 3), Rational(5, 3), 3, true);
  EXPECT_EQ(c.upper, Rational(14, 5));
  EXPECT_FALSE(c.exact);
}

TEST(ApproximationBounds, Preconditions) {
  EXPECT_THROW(approximation_bounds(0, 1, 2, false), std::invalid_argument);
  EXPECT_THROW(approximation_bounds(2, 1, 2, false), std::invalid_argument);
  EXPECT_THROW(approximation_bounds(1, 1, Rational(1, 2), false), std::invalid_argument);
}

TEST(WitnessBounds, Examples) {
  const auto e1 = witness_bounds(0, 1, 3, 4, 3, true, true);
  EXPECT_EQ(e1.exact, std::optional<Rational>(3));
  const auto e1n = witness_bounds(0, 1, 3, 4, 3, true, false);
  EXPECT_EQ(e1n.lower, Rational(3));
  EXPECT_EQ(e1n.upper, Rational(6));

  const auto e2 = witness_bounds(0, 1, 5, 8, 3, true, true);
  EXPECT_EQ(e2.exact, std::optional<Rational>(5));
  const auto e2n = witness_bounds(0, 1, 5, 8, 3, true, false);
  EXPECT_EQ(e2n.lower, Rational(5));
  EXPECT_EQ(e2n.upper, Rational(10));

  const auto e4 = witness_bounds(0, 5, Rational(17, 5), 5, 7, true, true);
  EXPECT_EQ(e4.exact, std::optional<Rational>(Rational(17, 5)));
  const auto e4n = witness_bounds(0, 5, Rational(17, 5), 5, 7, true, false);
  EXPECT_EQ(e4n.lower, Rational(17, 5));
  EXPECT_EQ(e4n.upper, Rational(85, 12));

  const auto e3 = witness_bounds(0, 6, Rational(8, 3), 3, 17, true, true);
  EXPECT_EQ(e3.upper, Rational(14, 5));
  EXPECT_FALSE(e3.exact);
}

TEST(WitnessBounds, WithoutExactnessUsesKernelSize) {
  const auto r = witness_bounds(2, 3, Rational(7, 3), 2, 4, false, true);
  EXPECT_EQ(r.lower, Rational(2 + 7, 5));
  EXPECT_EQ(r.upper, Rational(32 * 5, 4));
  EXPECT_FALSE(r.exact);
  EXPECT_THROW(witness_bounds(0, 1, 1, 2, 1, false, false), std::invalid_argument);
  EXPECT_THROW(witness_bounds(0, 0, 2, 2, 1, false, false), std::invalid_argument);
}

TEST(GeneralBound, Examples) {
  EXPECT_EQ(general_bound(2, 2, 2).upper, Rational(16));
  EXPECT_EQ(general_bound(4, 5, 2).upper, Rational(8192));
  EXPECT_EQ(general_bound(2, 1, 1).upper, Rational(4));
  EXPECT_FALSE(general_bound(2, 1, 1).lower);
}

TEST(LiouvilleMahler, UpperIsDegree) { EXPECT_EQ(liouville_mahler_bound(2).upper, Rational(2)); }

TEST(ExponentProperties, ExactnessNeverLoosens) {
  for (std::uint64_t b : {2, 3, 4, 5, 8})
    for (std::uint64_t k = 0; k <= 3; ++k)
      for (std::uint64_t l = 1; l <= 4; ++l)
        for (std::uint64_t s = 1; s <= 4; ++s)
          for (const Rational& omega : {Rational(3, 2), Rational(2), Rational(8, 3), Rational(4)}) {
            // A witness needs k + omega l < b^s (k + l).
            if (Rational(k) + omega * l >= Rational(ipow(b, s)) * (k + l)) continue;
            const auto loose = witness_bounds(k, l, omega, b, s, false, false);
            const auto tight = witness_bounds(k, l, omega, b, s, true, false);
            const auto reduced = witness_bounds(k, l, omega, b, s, true, true);
            // Exact agreement with an empty interval cannot occur.
            if (*tight.lower > tight.upper) continue;
            EXPECT_LE(tight.upper, loose.upper);
            EXPECT_LE(reduced.upper, tight.upper);
            EXPECT_LE(*reduced.lower, reduced.upper);
          }
}

TEST(ExponentProperties, Monotonicity) {
  const std::vector<Rational> grid = {Rational(1, 2), Rational(1), Rational(3, 2), Rational(2), Rational(5, 2), Rational(4)};
  for (const bool coprime : {false, true})
    for (const auto& delta : grid)
      for (const auto& rho : grid)
        for (const auto& theta : {Rational(1), Rational(2), Rational(3), Rational(9, 2)}) {
          if (delta > rho) continue;
          const auto base = approximation_bounds(delta, rho, theta, coprime);
          EXPECT_GE(approximation_bounds(delta, rho, theta + 1, coprime).upper, base.upper);
          EXPECT_GE(approximation_bounds(delta, rho + 1, theta, coprime).upper, base.upper);
          if (delta + Rational(1, 2) <= rho) {
            EXPECT_LE(approximation_bounds(delta + Rational(1, 2), rho, theta, coprime).upper, base.upper);
          }
        }
}

TEST(ExponentProperties, WitnessTheoremIsApproximationLemma) {
  for (std::uint64_t b : {2, 3, 4})
    for (std::uint64_t k = 0; k <= 2; ++k)
      for (std::uint64_t l = 1; l <= 3; ++l)
        for (std::uint64_t s = 1; s <= 3; ++s)
          for (const Rational& omega : {Rational(3, 2), Rational(2), Rational(5, 2)}) {
            const Rational delta = (omega - 1) * l / (k + l);
            const Rational rho = Rational(ipow(b, s)) - 1;
            if (delta > rho) continue;
            const auto w = witness_bounds(k, l, omega, b, s, false, false);
            const auto a = approximation_bounds(delta, rho, b, false);
            EXPECT_EQ(w.lower, a.lower);
            EXPECT_EQ(w.upper, a.upper);
          }
}
