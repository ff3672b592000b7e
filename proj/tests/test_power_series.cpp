#include <gtest/gtest.h>

#include <random>

#include <supercong/combinatorics.hpp>
#include <supercong/power_series.hpp>

using namespace supercong;

namespace {

Rational R(long n, long d = 1) { return Rational(n, d); }

TruncSeries S(std::vector<Rational> c) { return TruncSeries(std::move(c)); }

}  // namespace

TEST(PsMul, Examples) {
  EXPECT_EQ(S({1, 1, 0, 0, 0}) * S({1, -1, 0, 0, 0}), S({1, 0, -1, 0, 0}));
  EXPECT_EQ(S({R(1, 2), 1, 0}) * S({R(3, 2), 1, 0}), S({R(3, 4), 2, 1}));
  EXPECT_EQ(S({R(3, 4), 2, 1}) * S({R(3, 4), -2, 1}), S({R(9, 16), 0, R(-5, 2)}));
  // -(1/2)_2^2 * 4 * odd_harmonic2(2)
  EXPECT_EQ(-pow(rising_factorial(R(1, 2), 2), 2) * R(4) * odd_harmonic2(2), R(-5, 2));
}

TEST(PsMul, ResultCarriesMinimumOrder) {
  TruncSeries a = S({1, 1, 1, 1, 1});
  TruncSeries b = S({1, 1, 1});
  EXPECT_EQ((a * b).order(), 2);
  EXPECT_EQ((a + b).order(), 2);
}

TEST(PsInvert, Examples) {
  EXPECT_EQ(ps_invert(S({1, 0, 0, 0})), S({1, 0, 0, 0}));
  EXPECT_EQ(ps_invert(S({1, -1, 0, 0})), S({1, 1, 1, 1}));
  EXPECT_EQ(ps_invert(S({2, 1, 0})), S({R(1, 2), R(-1, 4), R(1, 8)}));
  EXPECT_THROW(ps_invert(S({0, 1, 0})), Error);
}

TEST(PochhammerSeries, Examples) {
  EXPECT_EQ(pochhammer_series(R(1, 2), R(1), 2, 2), S({R(3, 4), 2, 1}));
  EXPECT_EQ(pochhammer_series(R(1), R(0), 3, 2), S({6, 0, 0}));
  EXPECT_EQ(pochhammer_series(R(1, 2), R(1), 0, 4), S({1, 0, 0, 0, 0}));
  EXPECT_THROW(pochhammer_series(R(1), R(1), -1), Error);
}

TEST(Coefficient, Examples) {
  EXPECT_EQ(coefficient(S({1, 0, -1}), 2), R(-1));
  TruncSeries prod = pochhammer_series(R(1, 2), R(1), 2, 2) * pochhammer_series(R(1, 2), R(-1), 2, 2);
  EXPECT_EQ(coefficient(prod, 2), R(-5, 2));
  EXPECT_EQ(coefficient(S({R(7, 3), 4}), 0), R(7, 3));
  EXPECT_THROW(coefficient(S({1, 0, -1}), 3), Error);
  EXPECT_THROW(coefficient(S({1, 0, -1}), -1), Error);
}

TEST(SubstituteImaginary, FlipsDegreeTwoModFour) {
  EXPECT_EQ(substitute_imaginary(S({1, 0, 2, 0, 3})), S({1, 0, -2, 0, 3}));
  EXPECT_THROW(substitute_imaginary(S({1, 1, 0})), Error);
}

// d/dx (1/2 + x)_k at 0 = (1/2)_k * 2 * sum_{j<=k} 1/(2j-1).
TEST(DeformationFormulas, HalfLinearCoefficient) {
  for (long k = 0; k <= 40; ++k) {
    Rational odd_sum;
    for (long j = 1; j <= k; ++j) odd_sum += R(1, 2 * j - 1);
    TruncSeries s = pochhammer_series(R(1, 2), R(1), k, 1);
    ASSERT_EQ(coefficient(s, 1), rising_factorial(R(1, 2), k) * R(2) * odd_sum) << k;
  }
}

// (1/2+x)_k (1/2-x)_k is even with x^2 coefficient -4 (1/2)_k^2 odd_harmonic2(k).
TEST(DeformationFormulas, HalfProductIsEven) {
  for (long k = 0; k <= 40; ++k) {
    TruncSeries s = pochhammer_series(R(1, 2), R(1), k) * pochhammer_series(R(1, 2), R(-1), k);
    const Rational c = rising_factorial(R(1, 2), k);
    ASSERT_TRUE(s.is_even()) << k;
    ASSERT_EQ(s[0], c * c) << k;
    ASSERT_EQ(s[2], R(-4) * c * c * odd_harmonic2(k)) << k;
  }
}

// (1+x)_k (1-x)_k has x^2 coefficient -(k!)^2 harmonic2(k).
TEST(DeformationFormulas, UnitProduct) {
  for (long k = 0; k <= 40; ++k) {
    TruncSeries s = pochhammer_series(R(1), R(1), k) * pochhammer_series(R(1), R(-1), k);
    const Rational f(factorial(k));
    ASSERT_TRUE(s.is_even()) << k;
    ASSERT_EQ(s[2], -f * f * harmonic2(k)) << k;
  }
}

TEST(PsAlgebra, RandomizedLaws) {
  std::mt19937_64 rng(11);
  auto draw = [&](bool unit) {
    std::vector<Rational> c(5);
    for (auto& x : c) x = R(static_cast<long>(rng() % 41) - 20, static_cast<long>(rng() % 9) + 1);
    if (unit && c[0].is_zero()) c[0] = R(1);
    return S(c);
  };
  for (int i = 0; i < 200; ++i) {
    TruncSeries a = draw(true), b = draw(false), c = draw(false);
    ASSERT_EQ(ps_invert(ps_invert(a)), a);
    ASSERT_EQ(a * ps_invert(a), TruncSeries::constant(R(1)));
    ASSERT_EQ(a * b, b * a);
    ASSERT_EQ((a * b) * c, a * (b * c));
    ASSERT_EQ(a * (b + c), a * b + a * c);
  }
}

TEST(PsLinear, MulAndDivAreInverse) {
  TruncSeries s = S({1, 2, 3, 4, 5});
  TruncSeries t = s;
  t.mul_linear(R(3, 2), R(-1));
  t.div_linear(R(3, 2), R(-1));
  EXPECT_EQ(t, s);
  EXPECT_THROW(t.div_linear(R(0), R(1)), Error);
}

TEST(SeriesValuation, MinimumOverCoefficients) {
  EXPECT_EQ(series_valuation(S({R(25), R(0), R(5, 2)}), 5), Valuation::finite(1));
  EXPECT_TRUE(series_valuation(S({0, 0}), 5).is_infinite());
}
