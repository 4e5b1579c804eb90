#include <gtest/gtest.h>

#include "hypercat/catpow.hpp"
#include "oracles.hpp"

using namespace hypercat;
using namespace hypercat::catpow;

TEST(Catalan, Values) {
  const auto expect = oracle::catalan_by_convolution(30);
  for (std::size_t n = 0; n <= 30; ++n) EXPECT_EQ(catalan(n), expect[n]) << n;
  EXPECT_EQ(catalan(10), 16796);
}

TEST(CatalanPower, MatchesSchoolbookProducts) {
  for (std::size_t r = 1; r <= 6; ++r) {
    const auto expect = oracle::catalan_power_series(r, 15);
    const auto series = catalan_series_power(r, 15);
    for (std::size_t m = 0; m <= 15; ++m) {
      EXPECT_EQ(catalan_power(r, m), expect[m]) << "r=" << r << " m=" << m;
      EXPECT_EQ(series[m], expect[m]);
    }
  }
  EXPECT_THROW(catalan_power(0, 3), std::invalid_argument);
}

TEST(CatalanPower, ShiftLaw) {
  // T^2 = (T - 1)/t, so C^{(2)}_m = C_{m+1}.
  for (std::size_t m = 0; m <= 20; ++m) EXPECT_EQ(catalan_power(2, m), catalan(m + 1)) << m;
}

TEST(CatalanPower, AgreesWithMultivariatePowerCoeff) {
  for (std::size_t r = 1; r <= 8; ++r) {
    for (Count m = 0; m <= 12; ++m) {
      const TypeVector type = m ? TypeVector{{2, m}} : TypeVector{};
      EXPECT_EQ(catalan_power(r, m), power_coeff(type, r)) << "r=" << r << " m=" << m;
    }
  }
}

TEST(PQ, SmallCases) {
  EXPECT_TRUE(p_poly(0).is_zero());
  EXPECT_EQ(p_poly(1), (UniPoly{1}));
  EXPECT_EQ(p_poly(2), (UniPoly{1}));
  EXPECT_EQ(q_poly(2), (UniPoly{-1}));
  EXPECT_EQ(p_poly(3), (UniPoly{1, -1}));
  EXPECT_EQ(p_poly(5), (UniPoly{1, -3, 1}));
  EXPECT_EQ(q_poly(1), UniPoly{});
  EXPECT_THROW(q_poly(0), std::invalid_argument);
  EXPECT_EQ(to_string(p_poly(5)), "1 - 3 t + t^2");
}

TEST(PQ, DegreeAndRecurrence) {
  const auto t = UniPoly::monomial(1);
  for (std::size_t r = 1; r <= 30; ++r) {
    EXPECT_EQ(p_poly(r).degree(), static_cast<std::ptrdiff_t>((r - 1) / 2)) << r;
    if (r >= 2) {
      EXPECT_EQ(p_poly(r), p_poly(r - 1) - t * p_poly(r - 2)) << r;
    }
  }
}

TEST(PowerIdentity, VanishesThroughDegree20) {
  for (std::size_t r = 1; r <= 10; ++r) EXPECT_TRUE(verify_power_identity(r, 20).is_zero()) << r;
  EXPECT_THROW(verify_power_identity(0, 5), std::invalid_argument);
}

TEST(PowerIdentity, BreaksWithWrongP) {
  // A perturbed P leaves a nonzero remainder, so the check is not vacuous.
  const std::size_t r = 4, order = 24;
  const auto lhs = UniPoly::monomial(r - 1) * catalan_series_power(r, order);
  const auto wrong = mul_truncated(p_poly(r) + UniPoly::monomial(1), catalan_series(order), order) + q_poly(r);
  EXPECT_FALSE((lhs - wrong).truncated(20).is_zero());
}

TEST(PowerRecurrence, Holds) {
  for (std::size_t r = 3; r <= 10; ++r) {
    for (std::size_t m = 0; m <= 15; ++m) EXPECT_TRUE(power_recurrence_check(r, m)) << r << "," << m;
  }
  EXPECT_THROW(power_recurrence_check(2, 0), std::invalid_argument);
}

TEST(UniPoly, Arithmetic) {
  const UniPoly a{1, 2};
  const UniPoly b{-1, 0, 3};
  EXPECT_EQ(a * b, (UniPoly{-1, -2, 3, 6}));
  EXPECT_EQ(mul_truncated(a, b, 1), (UniPoly{-1, -2}));
  EXPECT_EQ(a + b, (UniPoly{0, 2, 3}));
  EXPECT_TRUE((a - a).is_zero());
  EXPECT_EQ(UniPoly{}.degree(), UniPoly::kZeroDegree);
}
