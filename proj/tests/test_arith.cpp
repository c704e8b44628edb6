#include <gtest/gtest.h>

#include <random>

#include "glab/arith/bigint.hpp"
#include "glab/arith/padic.hpp"
#include "glab/arith/tower.hpp"
#include "glab/error.hpp"

using namespace glab;

TEST(BigInt, DecimalRoundTrip) {
  BigInt n = ipow(20, 20);
  EXPECT_EQ(to_decimal(n), "104857600000000000000000000");
  EXPECT_EQ(parse_bigint("-104857600000000000000000000"), -n);
  EXPECT_EQ(decimal_digits(n), 27U);
  EXPECT_EQ(decimal_digits(0), 1U);
  EXPECT_THROW(parse_bigint("12x"), ParseError);
  EXPECT_THROW(parse_bigint(""), ParseError);
}

TEST(BigInt, FloorDivision) {
  EXPECT_EQ(floor_div(7, 2), 3);
  EXPECT_EQ(floor_div(-7, 2), -4);
  EXPECT_EQ(floor_div(-8, 2), -4);
}

TEST(BigInt, LengthLowerBoundIsSound) {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 500; ++i) {
    BigInt n = ipow(BigInt(rng() % 1000 + 2), rng() % 300);
    if (i % 2) n = -n;
    EXPECT_LE(decimal_length_lower_bound(n), to_decimal(n).size()) << n;
  }
}

TEST(PAdic, AdditionExample) {
  PAdicRing ring(20);
  auto x = ring.make(3, 1);
  auto y = ring.make(7, 2);
  auto sum = ring.add(x, y);
  EXPECT_EQ(ring.format(sum), "67/20^2");
  EXPECT_EQ(ring.scale(sum, 2), ring.make(67));
}

TEST(PAdic, CanonicalForm) {
  PAdicRing ring(20);
  EXPECT_EQ(ring.make(40, 1), ring.make(2));
  EXPECT_EQ(ring.make(0, 5), PAdicRational{});
  EXPECT_TRUE(ring.is_canonical(ring.make(3, 4)));
  EXPECT_EQ(ring.parse("67/20^2"), ring.make(67, 2));
  EXPECT_THROW(ring.parse("1/3^2"), ParseError);
  EXPECT_EQ(ring.parse("40/20^1"), ring.make(2));
}

TEST(PAdic, Valuation) {
  PAdicRing ring(20);
  EXPECT_EQ(ring.valuation(ring.make(400)), 2);
  EXPECT_EQ(ring.valuation(ring.make(3, 4)), -4);
  EXPECT_EQ(ring.valuation(ring.make(7)), 0);
  EXPECT_THROW(ring.valuation(ring.make(0)), DomainError);
}

TEST(PAdic, FloorAndFractional) {
  for (std::uint32_t p : {2U, 3U, 20U}) {
    PAdicRing ring(p);
    for (int num : {-17, -8, -1, 0, 1, 5, 17, 123}) {
      for (int e : {0, 1, 3}) {
        auto x = ring.make(num, e);
        auto f = ring.fractional(x);
        auto back = ring.add(ring.make(ring.floor(x)), f);
        EXPECT_EQ(back, x) << p << " " << num << " " << e;
        EXPECT_GE(f.num, 0);
        if (f.num != 0) EXPECT_LT(f.num, ring.power(f.denom_exp));
      }
    }
  }
}

TEST(PAdic, RingLawsOnRandomValues) {
  std::mt19937_64 rng(11);
  for (std::uint32_t p : {2U, 20U}) {
    PAdicRing ring(p);
    auto pick = [&] {
      return ring.make(static_cast<std::int64_t>(rng() % 2001) - 1000, static_cast<std::int64_t>(rng() % 6));
    };
    for (int i = 0; i < 300; ++i) {
      auto x = pick(), y = pick(), z = pick();
      EXPECT_EQ(ring.add(x, y), ring.add(y, x));
      EXPECT_EQ(ring.add(ring.add(x, y), z), ring.add(x, ring.add(y, z)));
      EXPECT_EQ(ring.add(x, ring.negate(x)), PAdicRational{});
      EXPECT_EQ(ring.multiply(x, ring.add(y, z)), ring.add(ring.multiply(x, y), ring.multiply(x, z)));
      const auto e = static_cast<std::int64_t>(rng() % 7) - 3;
      EXPECT_EQ(ring.scale(ring.scale(x, e), -e), x);
      EXPECT_TRUE(ring.is_canonical(ring.add(x, y)));
    }
  }
}

TEST(PAdic, DigitBudget) {
  PAdicRing ring(10, 50);
  EXPECT_NO_THROW(ring.scale(ring.make(1), 40));
  EXPECT_THROW(ring.scale(ring.make(1), 60), RepresentabilityError);
}

TEST(Tower, SmallHeights) {
  EXPECT_EQ(*tower(20, 0).value, 1);
  EXPECT_EQ(*tower(20, 1).value, 20);
  EXPECT_EQ(*tower(20, 2).value, ipow(20, 20));
  EXPECT_EQ(*tower(2, 3).value, 16);
}

TEST(Tower, HugeHeightIsSymbolic) {
  auto t = tower(20, 3);
  EXPECT_FALSE(t.representable());
  EXPECT_FALSE(t.describe().empty());
}
