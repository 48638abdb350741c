#include <gtest/gtest.h>

#include <limits>
#include <random>

#include "brauer/integer.hpp"

using brauer::Integer;

namespace {

Integer big(const char* s) { return Integer::parse(s); }

TEST(Integer, SmallArithmetic) {
  EXPECT_EQ(Integer(7) + Integer(5), Integer(12));
  EXPECT_EQ(Integer(7) - Integer(12), Integer(-5));
  EXPECT_EQ(Integer(-6) * Integer(7), Integer(-42));
  EXPECT_EQ(Integer(-7) / Integer(2), Integer(-3));
  EXPECT_EQ(Integer(-7) % Integer(2), Integer(-1));
  EXPECT_TRUE(Integer(0).is_zero());
  EXPECT_TRUE(Integer(-1).is_unit());
}

TEST(Integer, PromotesOnOverflow) {
  const Integer m = std::numeric_limits<std::int64_t>::max();
  const Integer s = m + Integer(1);
  EXPECT_FALSE(s.is_small());
  EXPECT_EQ(s.to_string(), "9223372036854775808");
  EXPECT_EQ(s - Integer(1), m);
  EXPECT_TRUE((s - Integer(1)).is_small());
  const Integer p = m * m;
  EXPECT_EQ(p / m, m);
  const Integer lo = std::numeric_limits<std::int64_t>::min();
  EXPECT_EQ((-lo).to_string(), "9223372036854775808");
  EXPECT_EQ(lo / Integer(-1), -lo);
}

TEST(Integer, ParseAndCompare) {
  EXPECT_EQ(big("-123456789012345678901234567890").to_string(),
            "-123456789012345678901234567890");
  EXPECT_LT(big("-123456789012345678901234567890"), Integer(-5));
  EXPECT_GT(big("123456789012345678901234567890"), Integer(5));
  EXPECT_THROW(Integer::parse("12x"), std::invalid_argument);
  EXPECT_THROW(Integer::parse(""), std::invalid_argument);
}

TEST(Integer, DivisionByZeroThrows) {
  EXPECT_THROW(Integer(3) / Integer(0), std::domain_error);
  EXPECT_THROW(Integer(3) % Integer(0), std::domain_error);
}

TEST(Integer, FloorAndRoundDivision) {
  for (int a = -20; a <= 20; ++a) {
    for (int b : {-7, -3, -2, -1, 1, 2, 3, 7}) {
      const Integer q = brauer::floor_div(a, b);
      const Integer r = Integer(a) - q * Integer(b);
      EXPECT_TRUE(r.is_zero() || r.sign() == (b > 0 ? 1 : -1)) << a << " " << b;
      EXPECT_LT(brauer::abs(r), brauer::abs(Integer(b)));
      const Integer rq = brauer::round_div(a, b);
      const Integer rr = Integer(a) - rq * Integer(b);
      EXPECT_LE(brauer::abs(rr + rr), brauer::abs(Integer(b))) << a << " " << b;
      const Integer m = brauer::mod_floor(a, std::abs(b));
      EXPECT_GE(m, Integer(0));
      EXPECT_LT(m, Integer(std::abs(b)));
    }
  }
}

TEST(Integer, GcdFamily) {
  EXPECT_EQ(brauer::gcd(12, -18), Integer(6));
  EXPECT_EQ(brauer::gcd(0, 0), Integer(0));
  EXPECT_EQ(brauer::lcm(4, 6), Integer(12));
  EXPECT_EQ(brauer::mod_inverse(3, 7), Integer(5));
  EXPECT_THROW(brauer::mod_inverse(2, 4), std::domain_error);
  std::mt19937_64 rng(7);
  for (int t = 0; t < 200; ++t) {
    const Integer a = Integer(static_cast<long>(rng() % 2000) - 1000) * big("1000000000000");
    const Integer b = Integer(static_cast<long>(rng() % 2000) - 1000);
    const auto e = brauer::xgcd(a, b);
    EXPECT_EQ(e.s * a + e.t * b, e.g);
    EXPECT_EQ(e.g, brauer::gcd(a, b));
  }
}

TEST(Integer, FusedMultiplyAdd) {
  Integer x = 5;
  x.add_mul(3, 4);
  EXPECT_EQ(x, Integer(17));
  x.sub_mul(big("100000000000000000000"), 2);
  EXPECT_EQ(x.to_string(), "-199999999999999999983");
}

}  // namespace
