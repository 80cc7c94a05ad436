#include <gtest/gtest.h>

#include "zdkit/exact.hpp"

using namespace zdkit;

TEST(Exact, FloorAndCeilOfRationals) {
  EXPECT_EQ(floor_of(make_rational(7, 2)), 3);
  EXPECT_EQ(ceil_of(make_rational(7, 2)), 4);
  EXPECT_EQ(ceil_of(make_rational(8, 2)), 4);
  EXPECT_EQ(floor_of(make_rational(-7, 2)), -4);
  EXPECT_EQ(ceil_of(make_rational(-7, 2)), -3);
}

TEST(Exact, FractionStringsRoundTrip) {
  EXPECT_EQ(to_fraction_string(make_rational(1836, 867)), "36/17");
  EXPECT_EQ(parse_fraction("1836/867"), make_rational(36, 17));
  EXPECT_EQ(parse_fraction("5"), Rational(5));
  EXPECT_THROW(parse_fraction("1/0"), DomainError);
  EXPECT_THROW(parse_fraction("x"), DomainError);
}

TEST(Exact, IntegerSquareRoots) {
  EXPECT_EQ(isqrt_ceil(105), 11u);
  EXPECT_EQ(isqrt_ceil(121), 11u);
  EXPECT_EQ(isqrt_ceil(1936), 44u);
  EXPECT_EQ(isqrt_ceil(1985), 45u);
  for (std::uint64_t x = 0; x < 5000; ++x) {
    const auto f = isqrt_floor(x), c = isqrt_ceil(x);
    ASSERT_LE(f * f, x);
    ASSERT_GT((f + 1) * (f + 1), x);
    ASSERT_GE(c * c, x);
    if (c) ASSERT_LT((c - 1) * (c - 1), x);
  }
  const std::uint64_t big = 0xffffffffull * 0xffffffffull;
  EXPECT_EQ(isqrt_floor(big), 0xffffffffull);
}

TEST(Exact, NarrowingRejectsOverflow) {
  EXPECT_EQ(to_u64(BigInt(42)), 42u);
  EXPECT_THROW(to_u64(BigInt(-1)), DomainError);
  EXPECT_THROW(to_u64(BigInt(1) << 70), DomainError);
}
