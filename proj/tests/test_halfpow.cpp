#include <gtest/gtest.h>

#include <cmath>
#include <stdexcept>

#include "augrule/halfpow.hpp"

using augrule::HalfPow;

TEST(HalfPow, Normalizes) {
  HalfPow h(4, -1);
  EXPECT_EQ(h.mantissa(), 1u);
  EXPECT_EQ(h.halfexp(), 3);
  EXPECT_EQ(HalfPow(0, 7), HalfPow::zero());
  EXPECT_EQ(HalfPow(6, 0), HalfPow(3, 2));
}

TEST(HalfPow, TrefoilThetaSum) {
  HalfPow sum = HalfPow::power(-1) + HalfPow::power(1) + HalfPow::power(1);
  EXPECT_EQ(sum, HalfPow(5, -1));
  EXPECT_EQ(HalfPow::scaled(5, -1), sum);
  EXPECT_NEAR(sum.to_double(), 5 / std::sqrt(2.0), 1e-12);
}

TEST(HalfPow, ZeroIsIdentity) {
  HalfPow z = HalfPow::zero();
  EXPECT_EQ(z + HalfPow(3, 1), HalfPow(3, 1));
  EXPECT_EQ(HalfPow(3, 1) + z, HalfPow(3, 1));
  EXPECT_TRUE((z + z).is_zero());
}

TEST(HalfPow, MismatchedParityRejected) {
  HalfPow a = HalfPow::power(1);
  EXPECT_THROW(a += HalfPow::power(2), std::domain_error);
}

TEST(HalfPow, Overflow) {
  HalfPow big(std::uint64_t{1} << 63, 0);
  EXPECT_THROW(big += HalfPow(std::uint64_t{1} << 63, 200), std::overflow_error);
}

TEST(HalfPow, Text) {
  EXPECT_EQ(to_string(HalfPow(5, -1)), "5*2^(-1/2)");
  EXPECT_EQ(to_string(HalfPow(1, 1)), "2^(1/2)");
  EXPECT_EQ(to_string(HalfPow(3, 0)), "3");
  EXPECT_EQ(to_string(HalfPow(1, 2)), "2^1");
  EXPECT_EQ(to_string(HalfPow(3, -4)), "3*2^-2");
  EXPECT_EQ(to_string(HalfPow::zero()), "0");
}

TEST(HalfPow, SumsMatchFloatingPoint) {
  // Exact sums of 2^(k/2) over same-parity k agree with long double evaluation.
  for (int base = -9; base <= 9; ++base) {
    HalfPow sum;
    long double expect = 0;
    for (int k = base; k <= base + 12; k += 2) {
      for (int rep = 0; rep < 3; ++rep) {
        sum += HalfPow::power(k);
        expect += std::pow(2.0L, k / 2.0L);
      }
    }
    EXPECT_NEAR(static_cast<long double>(sum.to_double()), expect, 1e-9L * expect);
  }
}
