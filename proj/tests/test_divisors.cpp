#include <gtest/gtest.h>

#include "dismal/divisors.hpp"
#include "oracle.hpp"

using namespace dismal;

namespace {

std::vector<std::uint64_t> values(const std::vector<Number>& ns) {
  std::vector<std::uint64_t> v;
  for (const auto& n : ns) v.push_back(n.value());
  return v;
}

}  // namespace

TEST(Divisors, MatchProductOracle) {
  for (auto [b, k] : {std::pair{2, 8}, {3, 5}, {5, 3}, {10, 3}}) {
    const oracle::ProductTable table(b, k);
    const Base base{b};
    for (std::uint64_t n = 1; n < oracle::pow(b, k); ++n) {
      const Number x = Number::from_value(n, base);
      const auto expected = table.divisors(n);
      ASSERT_EQ(values(divisor_list(x).divisors), expected) << x.to_string();
      for (std::uint64_t p = 1; p < oracle::pow(b, std::min(k, 2)); ++p) {
        const bool expect = std::binary_search(expected.begin(), expected.end(), p);
        ASSERT_EQ(divides(Number::from_value(p, base), x), expect);
      }
    }
  }
}

TEST(Divisors, DecimalExamples) {
  const std::uint64_t d[] = {9, 8, 7, 6, 5, 4, 3, 2, 1, 18, 90, 16};
  const char* sigma[] = {"9", "9", "9", "9", "9", "9", "9", "9", "9", "99", "99", "19"};
  for (int n = 1; n <= 12; ++n) {
    const auto r = divisor_list(Number::from_value(static_cast<std::uint64_t>(n), kDecimal));
    EXPECT_EQ(r.count, d[n - 1]) << n;
    EXPECT_EQ(r.sigma, parse(sigma[n - 1])) << n;
  }
  EXPECT_EQ(values(divisor_list(parse("700")).divisors),
            (std::vector<std::uint64_t>{7, 8, 9, 70, 80, 90, 700, 800, 900}));
}

TEST(Divisors, BinaryCounts) {
  const std::uint64_t d[] = {1, 2, 2, 3, 2, 4, 3, 4, 2, 4, 2, 6, 2, 6, 5, 5,
                             2, 4, 2, 6, 3, 4, 2, 8, 2, 4, 4, 9, 2, 10, 8};
  for (std::uint64_t n = 1; n <= 31; ++n) EXPECT_EQ(divisor_count(Number::from_value(n, kBinary)), d[n - 1]) << n;
}

TEST(Divisors, SmallestAndLargest) {
  const auto r = divisor_list(parse("1717"));
  EXPECT_EQ(r.divisors.front(), parse("7"));
  EXPECT_EQ(r.divisors.back(), parse("1919"));
}

TEST(Divisors, MaxCofactor) {
  EXPECT_EQ(max_cofactor(parse("12"), parse("12")), parse("9"));
  EXPECT_FALSE(max_cofactor(parse("21"), parse("12")).has_value());
  EXPECT_THROW(max_cofactor(parse("123"), parse("12")), DomainError);
  EXPECT_THROW(max_cofactor(Number(kDecimal), parse("12")), DomainError);
  EXPECT_TRUE(divides(parse("5"), Number(kDecimal)));
  EXPECT_FALSE(divides(Number(kDecimal), parse("5")));
  EXPECT_THROW(divisor_list(Number(kDecimal)), DomainError);
}

TEST(Divisors, TrailingZeros) {
  for (int b : {2, 3, 10}) {
    const Base base{b};
    for (std::uint64_t m = 1; m < 200; ++m) {
      if (m % static_cast<std::uint64_t>(b) == 0) continue;
      const auto dm = divisor_count(Number::from_value(m, base));
      std::uint64_t n = m;
      for (int r = 1; r <= 3; ++r) {
        n *= static_cast<std::uint64_t>(b);
        ASSERT_EQ(divisor_count(Number::from_value(n, base)), static_cast<std::uint64_t>(r + 1) * dm);
      }
    }
  }
}

TEST(Divisors, CountBounds) {
  const DivisorTable t(Base{3}, 6);
  for (std::uint64_t n = 1; n < t.limit(); ++n) {
    const auto k = oracle::length(n, 3);
    ASSERT_GE(t.count(n), 1u);
    ASSERT_LE(t.count(n), oracle::pow(3, k) - 1);
  }
}

TEST(Divisors, TableAgreesWithList) {
  for (auto [b, k] : {std::pair{2, 10}, {3, 6}, {10, 3}}) {
    const Base base{b};
    const DivisorTable t(base, static_cast<std::size_t>(k));
    for (std::uint64_t n = 1; n < t.limit(); ++n) {
      const auto r = divisor_list(Number::from_value(n, base));
      ASSERT_EQ(t.count(n), r.count) << n;
      ASSERT_EQ(t.sigma(n), r.sigma.value()) << n;
    }
  }
}

TEST(Divisors, SigmaClasses) {
  EXPECT_EQ(classify_sigma(parse("19")), SigmaClass::FixedPoint);
  EXPECT_EQ(classify_sigma(parse("10")), SigmaClass::AllOnesMax);
  EXPECT_EQ(classify_sigma(parse("12")), SigmaClass::Other);
  const DivisorTable t(Base{10}, 3);
  for (std::uint64_t n = 1; n < t.limit(); ++n) ASSERT_EQ(t.sigma(n) == n, n % 10 == 9) << n;
}

TEST(Divisors, Base3Perfect) {
  EXPECT_TRUE(is_base3_perfect(parse("2@3")));
  EXPECT_TRUE(is_base3_perfect(parse("12@3")));
  EXPECT_FALSE(is_base3_perfect(parse("20@3")));
  EXPECT_THROW(is_base3_perfect(parse("12")), DomainError);
}
