#include <gtest/gtest.h>

#include <algorithm>

#include "dismal/divisors.hpp"
#include "dismal/primes.hpp"
#include "oracle.hpp"

using namespace dismal;

TEST(Primes, MatchProductOracle) {
  for (auto [b, k] : {std::pair{2, 10}, {3, 5}, {4, 4}, {10, 3}}) {
    const oracle::ProductTable table(b, k);
    const Base base{b};
    for (std::uint64_t n = 1; n < oracle::pow(b, k); ++n) {
      ASSERT_EQ(is_prime(Number::from_value(n, base)), table.is_prime(n)) << b << ' ' << n;
    }
  }
}

TEST(Primes, SmallExamples) {
  EXPECT_FALSE(is_prime(parse("9")));
  EXPECT_FALSE(is_prime(parse("5")));
  EXPECT_FALSE(is_prime(parse("18")));
  EXPECT_TRUE(is_prime(parse("19")));
  EXPECT_TRUE(is_prime(parse("91")));
  EXPECT_TRUE(is_prime(parse("11@2")));
  EXPECT_TRUE(is_prime(parse("101@2")));
  EXPECT_FALSE(is_prime(parse("111@2")));
  EXPECT_TRUE(is_prime(parse("10111@2")));
  EXPECT_TRUE(is_pseudoprime(parse("101")));
  EXPECT_FALSE(is_prime(parse("101")));
  EXPECT_THROW(is_pseudoprime(parse("7")), DomainError);
}

TEST(Primes, SieveAgreesWithPredicate) {
  for (auto [b, k] : {std::pair{2, 12}, {3, 6}, {5, 4}, {10, 4}}) {
    const Base base{b};
    const PrimeSieve sieve(base, static_cast<std::size_t>(k));
    std::uint64_t count = 0;
    for (std::uint64_t v = oracle::pow(b, k - 1); v < oracle::pow(b, k); ++v) {
      const bool p = is_prime(Number::from_value(v, base));
      ASSERT_EQ(sieve.is_prime_value(v), p) << v;
      count += p;
    }
    EXPECT_EQ(sieve.count(), count);
    EXPECT_EQ(sieve.primes().size(), count);
  }
}

TEST(Primes, BinaryCounts) {
  const std::uint64_t expected[] = {0, 2, 1, 3, 5, 9, 19, 39, 77, 168, 323, 682, 1424, 2902};
  for (std::size_t k = 1; k <= 14; ++k) EXPECT_EQ(prime_count(kBinary, k).count, expected[k - 1]) << k;
}

TEST(Primes, CandidateBound) {
  EXPECT_EQ(prime_candidate_bound(kDecimal, 2), 73u);
  EXPECT_EQ(prime_candidate_bound(kDecimal, 3), 738u);
  EXPECT_EQ(prime_candidate_bound(kBinary, 5), 8u);
  EXPECT_EQ(prime_candidate_bound(kDecimal, 1), 0u);
}

TEST(Primes, NecessaryCount) {
  for (int b : {2, 3, 10}) {
    const Base base{b};
    for (int k = 2; k <= 5; ++k) {
      std::uint64_t n = 0;
      for (std::uint64_t v = oracle::pow(b, k - 1); v < oracle::pow(b, k); ++v) {
        const auto d = oracle::digits(v, b);
        const bool has_unit = std::find(d.begin(), d.end(), b - 1) != d.end();
        n += has_unit && (k == 2 || d[0] != 0);
      }
      EXPECT_EQ(prime_necessary_count(base, static_cast<std::size_t>(k)), n);
      EXPECT_LE(prime_count(base, static_cast<std::size_t>(k)).count, n);
    }
  }
}

// rstu is prime iff it contains 9 and one of: r, u > s, t; r, s, u > t;
// r, t, u > s.
TEST(Primes, FourDigitCharacterization) {
  for (int v = 1000; v < 10000; ++v) {
    const int r = v / 1000, s = v / 100 % 10, t = v / 10 % 10, u = v % 10;
    const bool nine = r == 9 || s == 9 || t == 9 || u == 9;
    const bool shape = (std::min(r, u) > std::max(s, t)) || (std::min({r, s, u}) > t) || (std::min({r, t, u}) > s);
    ASSERT_EQ(is_prime(Number::from_value(static_cast<std::uint64_t>(v), kDecimal)), nine && shape) << v;
  }
}

TEST(Primes, Factorizations) {
  const auto f = factorizations(parse("1119"));
  ASSERT_EQ(f.size(), 2u);
  std::vector<std::vector<Number>> lists;
  for (const auto& x : f) {
    EXPECT_EQ(x.r, 9);
    EXPECT_EQ(x.product(kDecimal), parse("1119"));
    lists.push_back(x.primes);
  }
  std::sort(lists.begin(), lists.end());
  EXPECT_EQ(lists[0], (std::vector<Number>{parse("19"), parse("19"), parse("19")}));
  EXPECT_EQ(lists[1], (std::vector<Number>{parse("19"), parse("109")}));

  for (std::uint64_t v = 1; v < 2000; ++v) {
    const Number n = Number::from_value(v, kDecimal);
    const auto fs = factorizations(n);
    ASSERT_FALSE(fs.empty()) << v;
    for (const auto& x : fs) {
      ASSERT_EQ(x.product(kDecimal), n) << v;
      for (const auto& p : x.primes) ASSERT_TRUE(is_prime(p));
    }
  }
}

TEST(Primes, PrimeDivisorSum) {
  EXPECT_TRUE(prime_divisor_sum_test(parse("19")));
  EXPECT_TRUE(prime_divisor_sum_test(parse("90")));
  EXPECT_FALSE(prime_divisor_sum_test(parse("119")));
  EXPECT_THROW(prime_divisor_sum_test(parse("9")), DomainError);
  for (int b : {2, 3, 10}) {
    const Base base{b};
    for (std::uint64_t v = 1; v < 600; ++v) {
      const Number n = Number::from_value(v, base);
      if (n.is_unit()) continue;
      ASSERT_EQ(prime_divisor_sum_test(n), is_prime(n)) << n.to_string();
    }
  }
}

TEST(Templates, Counts) {
  const std::size_t all[] = {1, 1, 3, 8, 51};
  const std::size_t binary[] = {1, 1, 3, 5, 9};
  for (std::size_t k = 2; k <= 6; ++k) {
    const auto ts = templates(k);
    EXPECT_EQ(ts.size(), all[k - 2]) << k;
    EXPECT_EQ(static_cast<std::size_t>(std::count_if(ts.begin(), ts.end(), [](const Template& t) { return t.is_binary(); })),
              binary[k - 2])
        << k;
  }
}

TEST(Templates, AreMinimalPseudoprimes) {
  for (const auto& t : templates(5)) {
    const Base base{std::max(2, t.digits.max_digit() + 1)};
    EXPECT_TRUE(is_pseudoprime(rebase(t.digits, base))) << t.digits.to_string();
  }
}

TEST(Templates, PromotionCoversAllPrimes) {
  for (std::size_t k = 2; k <= 5; ++k) {
    const auto promoted = promote_all(templates(k), kDecimal, true);
    EXPECT_EQ(promoted, primes_of_length(kDecimal, k)) << k;
  }
}

TEST(Templates, Promotions) {
  const auto ps = promotions(parse("101@2"), kDecimal);
  EXPECT_EQ(ps.size(), 285u);  // r > s < u, summed over s: (9 - s)^2
  for (const auto& p : ps) EXPECT_EQ(p.length(), 3u);
}
