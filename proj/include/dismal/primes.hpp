#pragma once

#include <cstdint>
#include <vector>

#include "dismal/number.hpp"

namespace dismal {

/// Prime in base b: not b-1, and the only factorization is (b-1) * itself.
bool is_prime(const Number& n);

/// Every factorization n = p * q has a single-digit factor. Requires at
/// least two digits.
bool is_pseudoprime(const Number& n);

/// Composite-marking sieve over all k-digit numbers of one base.
///
/// A k-digit number containing b-1 is composite exactly when it is p * q with
/// len(p) + len(q) - 1 = k and both lengths at least 2; both factors then
/// contain b-1 themselves. Numbers without the digit b-1 are never prime.
/// One bit per k-digit number.
class PrimeSieve {
 public:
  /// Throws BudgetExceeded when the bitmap would exceed `max_bits`.
  PrimeSieve(Base base, std::size_t k, std::uint64_t max_bits = std::uint64_t{1} << 30);

  Base base() const noexcept { return base_; }
  std::size_t length() const noexcept { return k_; }
  std::uint64_t count() const noexcept { return count_; }
  /// Ordinary integer value of a k-digit number.
  bool is_prime_value(std::uint64_t value) const;
  /// All k-digit primes, ascending.
  std::vector<Number> primes() const;

 private:
  bool bit(std::uint64_t index) const { return (composite_[index >> 6] >> (index & 63)) & 1u; }

  Base base_;
  std::size_t k_;
  std::uint64_t first_;  // b^(k-1)
  std::uint64_t span_;   // number of k-digit values
  std::vector<std::uint64_t> composite_;
  std::uint64_t count_ = 0;
};

std::vector<Number> primes_of_length(Base base, std::size_t k);

struct PrimeCount {
  std::size_t k = 0;
  std::uint64_t count = 0;
  /// (b-1)^2 b^(k-2) - (b-2)(b-1)^(k-2), evaluated as written. Zero for k < 2.
  std::uint64_t candidate_bound = 0;
  /// k-digit numbers that contain b-1 and, for k > 2, do not end in 0.
  std::uint64_t necessary = 0;
};

PrimeCount prime_count(Base base, std::size_t k);

std::uint64_t prime_candidate_bound(Base base, std::size_t k);
/// Exact count of k-digit numbers meeting the necessary conditions for
/// primality: (b-1)^2 b^(k-2) - (b-2)^2 (b-1)^(k-2) for k > 2, 2(b-1) for
/// k = 2, zero otherwise.
std::uint64_t prime_necessary_count(Base base, std::size_t k);

/// n = r * (product of primes). `r` is b-1 when n contains b-1, otherwise the
/// largest digit of n. An empty prime list stands for the unit.
struct Factorization {
  Digit r = 0;
  std::vector<Number> primes;  // ascending

  Number product(Base base) const;
  friend bool operator==(const Factorization&, const Factorization&) = default;
};

/// Every distinct multiset of primes (with the multiplier r) whose product is
/// n. When n lacks the digit b-1, its largest digit r is factored out and the
/// rest is taken from the number with every r raised to b-1.
std::vector<Factorization> factorizations(const Number& n);

/// Dismal sum of the distinct prime divisors of n equals n.
bool prime_divisor_sum_test(const Number& n);

/// A pseudoprime pattern in minimal-alphabet form from which other
/// pseudoprimes are obtained by promotion.
struct Template {
  Number digits;
  /// This pattern is the numerically smaller of itself and its reversal.
  bool reversal_canonical = true;

  /// Uses only the labels 0 and 1.
  bool is_binary() const noexcept { return digits.max_digit() <= 1; }
};

/// The templates of length k, ascending. Patterns are relabelled to the
/// alphabet {0, ..., a-1} (or {1, ..., a} when the leading digit is the
/// smallest); a template is a pseudoprime pattern none of whose merges of two
/// adjacent digit classes is a pseudoprime.
std::vector<Template> templates(std::size_t k);

/// Templates of every length 2..max_k with reversal duplicates folded.
std::vector<Template> reduced_templates(std::size_t max_k);

/// Every k-digit base-b number n with a digit map g such that g(n) = t.
/// Equivalently t_x < t_y implies n_x < n_y for all positions x, y.
std::vector<Number> promotions(const Number& t, Base base);

/// Union of the promotions of several templates, optionally restricted to
/// numbers containing b-1; ascending without duplicates.
std::vector<Number> promote_all(const std::vector<Template>& ts, Base base, bool require_unit_digit);

}  // namespace dismal
