#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "dismal/divisors.hpp"
#include "dismal/structures.hpp"
#include "oracle.hpp"

using namespace dismal;

namespace {

// Covers of a w-set by nonempty subsets, counted over all families of subsets.
std::uint64_t setcover_bruteforce(int w) {
  const unsigned subsets = 1u << w, full = subsets - 1;
  std::uint64_t count = 0;
  // Families of nonempty subsets: bitmask over subsets 1..2^w - 1.
  for (std::uint64_t fam = 0; fam < (std::uint64_t{1} << (subsets - 1)); ++fam) {
    unsigned cover = 0;
    for (unsigned s = 1; s < subsets; ++s) {
      if (fam >> (s - 1) & 1u) cover |= s;
    }
    count += cover == full;
  }
  return count;
}

}  // namespace

TEST(Poset, Ranks) {
  const PosetView view(kDecimal, 4);
  EXPECT_EQ(view.rank(parse("9")), 0);
  EXPECT_EQ(view.rank(parse("19")), 1);
  EXPECT_EQ(view.rank(parse("7")), 2);
  EXPECT_EQ(view.rank(parse("8989")), 2);
  EXPECT_EQ(view.rank(parse("1011")), 9);
  EXPECT_THROW(view.rank(parse("12345")), DomainError);
  EXPECT_THROW(view.rank(Number(kDecimal)), DomainError);
  const auto r2 = view.of_rank(2);
  EXPECT_EQ(r2[0], parse("7"));
}

TEST(Poset, RankIsLongestChain) {
  const PosetView view(Base{3}, 5);
  const DivisorTable table(Base{3}, 5);
  for (std::uint64_t v = 1; v < table.limit(); ++v) {
    const Number n = Number::from_value(v, Base{3});
    int best = 0;
    for (const auto& d : divisor_list(n).divisors) {
      if (d != n) best = std::max(best, view.rank(d) + 1);
    }
    ASSERT_EQ(view.rank(n), best) << n.to_string();
  }
}

TEST(Poset, MeetAndJoin) {
  EXPECT_FALSE(meet(parse("8989"), parse("9898")).has_value());
  const auto common = common_divisors(parse("8989"), parse("9898"));
  for (int d = 0; d <= 8; ++d) {
    const Number p = Number::from_msf(kDecimal, {9, d, 9});
    EXPECT_NE(std::find(common.begin(), common.end(), p), common.end()) << d;
  }
  const auto j = join(parse("909"), parse("919"), 4);
  EXPECT_EQ(j.status, JoinStatus::Absent);
  EXPECT_FALSE(j.value().has_value());
  EXPECT_GE(j.minimal.size(), 2u);

  EXPECT_EQ(meet(parse("19"), parse("1999")), parse("19"));
  const auto j2 = join(parse("19"), parse("9"), 3);
  EXPECT_EQ(j2.status, JoinStatus::Candidate);
  EXPECT_EQ(j2.value(), parse("19"));
  EXPECT_TRUE(is_rel_prime(parse("19"), parse("29")));
  EXPECT_FALSE(is_rel_prime(parse("19"), parse("1919")));
}

TEST(Totient, Tables) {
  const std::uint64_t phi2[] = {1, 2, 2, 4, 6, 2, 4, 8, 14, 6, 14, 5, 14, 5, 7, 16, 30, 14, 30, 12};
  const std::uint64_t phi10[] = {1, 1, 1, 1, 1, 1, 1, 1, 9, 18, 2, 18, 18, 18, 18, 18, 18, 18, 90, 18};
  for (std::uint64_t n = 1; n <= 20; ++n) {
    EXPECT_EQ(phi(Number::from_value(n, kBinary)), phi2[n - 1]) << n;
    EXPECT_EQ(phi(Number::from_value(n, kDecimal)), phi10[n - 1]) << n;
  }
}

TEST(Partitions, Examples) {
  EXPECT_EQ(partition_count(parse("21@3")), 22);
  EXPECT_EQ(partition_count(parse("11@2")), 5);
  EXPECT_EQ(partition_count(Number(kDecimal)), 1);
  EXPECT_EQ(partition_count(parse("100")), 1);
  EXPECT_EQ(partition_count_bruteforce(parse("21@3")), 22u);
}

TEST(Partitions, FormulaMatchesBruteForce) {
  for (int b = 2; b <= 10; ++b) {
    const Base base{b};
    for (std::uint64_t v = 0; v < 5000; ++v) {
      const Number n = Number::from_value(v, base);
      std::uint64_t cells = 1;
      for (auto d : n.digits()) cells *= d + 1u;
      if (cells > 21) continue;
      ASSERT_EQ(partition_count(n), partition_count_bruteforce(n)) << n.to_string();
    }
  }
}

TEST(Partitions, SetCovers) {
  for (int w = 1; w <= 4; ++w) {
    EXPECT_EQ(setcover_count(w), setcover_bruteforce(w)) << w;
    EXPECT_EQ(setcover_count(w), partition_count(repunit(kBinary, static_cast<std::size_t>(w)))) << w;
  }
  EXPECT_EQ(setcover_count(4), 32297);
}

TEST(Partitions, Invariants) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 300; ++i) {
    const int b = 2 + static_cast<int>(rng() % 9);
    std::vector<Digit> d(1 + rng() % 4);
    for (auto& x : d) x = static_cast<Digit>(rng() % static_cast<unsigned>(b));
    d.back() = static_cast<Digit>(1 + rng() % static_cast<unsigned>(b - 1));
    const Number n(Base{b}, d);
    const BigInt p = partition_count(n);

    auto shuffled = d;
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    ASSERT_EQ(partition_count(Number(Base{b}, shuffled)), p);

    std::vector<Digit> nonzero;
    std::copy_if(d.begin(), d.end(), std::back_inserter(nonzero), [](Digit x) { return x != 0; });
    ASSERT_EQ(partition_count(Number(Base{b}, nonzero)), p);

    unsigned y = 1;
    for (auto x : d) y *= x;
    if (y > 0) ASSERT_EQ(p % (BigInt(1) << (y - 1)), 0) << n.to_string();
  }
  for (int v = 1; v <= 9; ++v) EXPECT_EQ(partition_count(Number::from_value(static_cast<std::uint64_t>(v), kDecimal)), BigInt(1) << (v - 1));
}

TEST(Partitions, AdditiveClasses) {
  EXPECT_EQ(additive_classification(parse("100")), AdditiveClass::AdditivePrime);
  EXPECT_EQ(additive_classification(parse("1")), AdditiveClass::AdditivePrime);
  EXPECT_EQ(additive_classification(Number(kDecimal)), AdditiveClass::AdditivePrime);
  EXPECT_EQ(additive_classification(parse("21@3")), AdditiveClass::AdditivePerfect);
}
