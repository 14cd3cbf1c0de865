#include <gtest/gtest.h>

#include "zeck/fib.hpp"

namespace zeck {
namespace {

TEST(Fib, BaseCases) {
  EXPECT_EQ(fib(0), 0);
  EXPECT_EQ(fib(1), 1);
  EXPECT_EQ(fib(2), 1);
  EXPECT_EQ(fib_shifted(0), 1);
  EXPECT_EQ(fib_shifted(1), 2);
  EXPECT_EQ(fib_signed(-1), 1);
}

TEST(Fib, RecurrenceOracle) {
  Integer prev = 0, cur = 1;
  for (std::size_t n = 1; n <= 400; ++n) {
    ASSERT_EQ(fib(n), cur) << "n=" << n;
    Integer next = prev + cur;
    prev = cur;
    cur = next;
  }
  EXPECT_EQ(fib(10), 55);
}

TEST(Fib, PastSixtyFourBits) {
  EXPECT_EQ(fib(93), Integer("12200160415121876738"));
  EXPECT_EQ(fib(94), Integer("19740274219868223167"));
  EXPECT_EQ(fib(1000) , fib(999) + fib(998));
}

TEST(Fib, IndexAdditionIdentity) {
  for (std::size_t m = 1; m <= 60; ++m) {
    for (std::size_t n = 1; n <= 60; ++n) {
      ASSERT_EQ(fib(m) * fib(n) + fib(m + 1) * fib(n + 1), fib(m + n + 1)) << m << "," << n;
    }
  }
}

TEST(PhiPow, Examples) {
  EXPECT_EQ(phi_pow(0), GoldenNumber(1, 0));
  EXPECT_EQ(phi_pow(1), GoldenNumber(0, 1));
  EXPECT_EQ(phi_pow(3), GoldenNumber(1, 2));
  EXPECT_EQ(phi_pow(-1), GoldenNumber(-1, 1));
  EXPECT_EQ(phi_pow(-1) * GoldenNumber(0, 1), GoldenNumber(1, 0));
}

TEST(PhiPow, FibonacciCoefficients) {
  for (std::int64_t m = 0; m <= 200; ++m) {
    ASSERT_EQ(phi_pow(m), GoldenNumber(fib_signed(m - 1), fib(static_cast<std::size_t>(m)))) << m;
  }
}

TEST(PhiPow, InverseLaw) {
  for (std::int64_t m = -50; m <= 50; ++m) {
    ASSERT_EQ(phi_pow(m) * phi_pow(-m), GoldenNumber(1, 0)) << m;
    ASSERT_EQ(phi_pow(m) * GoldenNumber(0, 1), phi_pow(m + 1)) << m;
  }
}

TEST(GoldenNumber, RingLaws) {
  const GoldenNumber phi(0, 1);
  EXPECT_EQ(phi * phi, GoldenNumber(1, 1));
  EXPECT_EQ(phi_pow(3) * phi_pow(-3), GoldenNumber(1, 0));
  const GoldenNumber x(3, -7), y(-2, 5), z(11, 4);
  EXPECT_EQ(x * (y + z), x * y + x * z);
  EXPECT_EQ((x * y) * z, x * (y * z));
  EXPECT_EQ(x - x, GoldenNumber());
}

TEST(GoldenNumber, CompareWithRationals) {
  const GoldenNumber phi(0, 1);
  EXPECT_EQ(golden_cmp(phi, Rational(8, 5)), std::strong_ordering::greater);
  EXPECT_EQ(golden_cmp(phi, Rational(13, 8)), std::strong_ordering::less);
  EXPECT_EQ(golden_cmp(GoldenNumber(2, 0), Rational(2)), std::strong_ordering::equal);
  EXPECT_EQ(golden_cmp(phi_pow(-1), Rational(618, 1000)), std::strong_ordering::greater);
  EXPECT_EQ(golden_cmp(phi_pow(-1), Rational(619, 1000)), std::strong_ordering::less);
  EXPECT_EQ(golden_cmp(-phi, Rational(-8, 5)), std::strong_ordering::less);
}

// Convergents F_{k+1}/F_k alternate around phi: below for odd k, above for even k.
TEST(GoldenNumber, CompareAgainstConvergents) {
  const GoldenNumber phi(0, 1);
  for (std::size_t k = 2; k < 150; ++k) {
    const auto expected = k % 2 == 1 ? std::strong_ordering::greater : std::strong_ordering::less;
    ASSERT_EQ(golden_cmp(phi, Rational(fib(k + 1), fib(k))), expected) << k;
  }
}

TEST(GoldenNumber, SignOfTinyValues) {
  // phi^-60 = F_61 - F_60 phi: huge coefficients, tiny positive value
  EXPECT_EQ(phi_pow(-60).sign(), 1);
  EXPECT_EQ(phi_pow(-61).sign(), 1);
  EXPECT_EQ((-phi_pow(-61)).sign(), -1);
}

TEST(GoldenNumber, Decimal) {
  EXPECT_EQ(GoldenNumber(0, 1).to_decimal(10), "1.6180339887");
  EXPECT_EQ(phi_pow(-1).to_decimal(6), "0.618033");
  EXPECT_EQ(GoldenNumber(-2, 0).to_decimal(2), "-2.00");
  EXPECT_EQ(GoldenNumber(0, -1).to_decimal(3), "-1.619");
  EXPECT_NEAR(phi_pow(-40).approx(), 4.370130339181067e-9, 1e-12);
}

TEST(Isqrt, SmallAndLarge) {
  for (std::uint64_t n = 0; n < 5000; ++n) {
    const std::uint64_t r = isqrt(n);
    ASSERT_LE(r * r, n);
    ASSERT_GT((r + 1) * (r + 1), n);
  }
  EXPECT_EQ(isqrt(std::uint64_t{0xFFFFFFFFFFFFFFFFull}), 0xFFFFFFFFull);
  const Integer big = Integer("123456789012345678901234567890123456789");
  const Integer r = isqrt(big);
  EXPECT_LE(r * r, big);
  EXPECT_GT((r + 1) * (r + 1), big);
  EXPECT_THROW(isqrt(Integer(-1)), std::domain_error);
}

TEST(FloorMulPhi, MatchesSign) {
  EXPECT_EQ(floor_mul_phi(0), 0);
  EXPECT_EQ(floor_mul_phi(1), 1);
  EXPECT_EQ(floor_mul_phi(-1), -2);
  EXPECT_EQ(floor_mul_phi(10), 16);
  EXPECT_EQ(floor_mul_phi(-10), -17);
}

}  // namespace
}  // namespace zeck
