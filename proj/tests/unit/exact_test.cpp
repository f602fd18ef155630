#include <random>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "permuto/exact.hpp"

namespace permuto {
namespace {

TEST(Binomial, StandardValues) {
  EXPECT_EQ(binomial(4, 2), 6);
  EXPECT_EQ(binomial(0, 0), 1);
  EXPECT_EQ(binomial(10, 0), 1);
  EXPECT_EQ(binomial(10, 10), 1);
  EXPECT_EQ(binomial(64, 32), BigInt("1832624140942590534"));
}

TEST(Binomial, OutOfRangeIsZero) {
  EXPECT_EQ(binomial(-1, 1), 0);
  EXPECT_EQ(binomial(-1, 0), 0);
  EXPECT_EQ(binomial(3, -1), 0);
  EXPECT_EQ(binomial(3, 4), 0);
}

TEST(Binomial, MatchesFactorialOracle) {
  for (int a = -3; a <= 40; ++a) {
    for (int b = -3; b <= 43; ++b) {
      ASSERT_EQ(binomial(a, b), oracle::binomial_by_factorials(a, b)) << a << " " << b;
    }
  }
}

TEST(Binomial, PascalRecurrence) {
  for (int a = 1; a <= 40; ++a) {
    for (int b = 1; b <= a; ++b) {
      ASSERT_EQ(binomial(a, b), binomial(a - 1, b - 1) + binomial(a - 1, b)) << a << " " << b;
    }
  }
}

TEST(Multinomial, Values) {
  EXPECT_EQ(multinomial({1, 2, 0}), 3);
  EXPECT_EQ(multinomial({0, 0, 0}), 1);
  EXPECT_EQ(multinomial({1, 1, 1}), 6);
  EXPECT_EQ(multinomial({}), 1);
  EXPECT_THROW(multinomial({1, -1, 2}), std::invalid_argument);
}

TEST(Multinomial, FactorsIntoBinomials) {
  for (int m = 0; m <= 30; ++m) {
    for (int l = 0; m + l <= 30; ++l) {
      for (int r = 0; m + l + r <= 30; ++r) {
        ASSERT_EQ(multinomial({m, l, r}), binomial(m + l + r, m) * binomial(l + r, l));
      }
    }
  }
}

TEST(Factorial, Values) {
  EXPECT_EQ(factorial(0), 1);
  EXPECT_EQ(factorial(3), 6);
  EXPECT_EQ(factorial(10), 3628800);
  EXPECT_EQ(factorial(25), BigInt("15511210043330985984000000"));
  EXPECT_THROW(factorial(-1), std::invalid_argument);
}

TEST(Rational, NormalizedEagerly) {
  const BigRational q = make_rational(6, -4);
  EXPECT_EQ(numerator_of(q), -3);
  EXPECT_EQ(denominator_of(q), 2);
  EXPECT_EQ(to_string(q), "-3/2");
  EXPECT_EQ(to_string(make_rational(8, 4)), "2");
  EXPECT_EQ(to_string(make_rational(1, 3) + make_rational(1, 6)), "1/2");
  EXPECT_TRUE(is_integer(make_rational(10, 5)));
  EXPECT_THROW(make_rational(1, 0), std::domain_error);
}

TEST(Rational, Power) {
  EXPECT_EQ(power(make_rational(-1, 2), 3), make_rational(-1, 8));
  EXPECT_EQ(power(make_rational(2, 3), 0), 1);
  EXPECT_EQ(power(make_rational(2, 3), -2), make_rational(9, 4));
}

TEST(Rational, FieldLawsOnRandomValues) {
  std::mt19937_64 rng(20261016);
  std::uniform_int_distribution<std::int64_t> num(-1000000, 1000000);
  std::uniform_int_distribution<std::int64_t> den(1, 100000);
  auto draw = [&] { return make_rational(num(rng), den(rng)); };
  for (int trial = 0; trial < 2000; ++trial) {
    const BigRational a = draw(), b = draw(), c = draw();
    ASSERT_EQ((a + b) + c, a + (b + c));
    ASSERT_EQ((a * b) * c, a * (b * c));
    ASSERT_EQ(a + b, b + a);
    ASSERT_EQ(a * b, b * a);
    ASSERT_EQ(a * (b + c), a * b + a * c);
    ASSERT_GT(denominator_of(a * b + c), 0);
  }
}

}  // namespace
}  // namespace permuto
