#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "dismal/number.hpp"

namespace dismal {

/// Divisors of a nonzero number together with d(n) and sigma(n).
struct DivisorReport {
  Number n;
  std::vector<Number> divisors;  // ascending
  std::uint64_t count = 0;
  Number sigma;
};

/// Largest candidate cofactor of length len(n) - len(p) + 1: q_j is the
/// minimum over i of n_{i+j} where p_i > n_{i+j}, else b-1. Every cofactor q
/// with p * q = n is dominated by it and products are monotone under
/// dominance, so p divides n exactly when p * q_max = n. Returns that q, or
/// nullopt when the product check fails.
///
/// Throws DomainError if p or n is zero or len(p) > len(n).
std::optional<Number> max_cofactor(const Number& p, const Number& n);

/// True iff p * q = n for some q. Every p divides 0; 0 divides only 0.
bool divides(const Number& p, const Number& n);

/// All divisors of n, by exhaustive candidate testing. Throws DomainError for
/// n = 0 and BudgetExceeded beyond `max_candidates` candidates.
DivisorReport divisor_list(const Number& n, std::uint64_t max_candidates = 10'000'000);

std::uint64_t divisor_count(const Number& n);
/// Dismal sum of all divisors of n.
Number divisor_sum(const Number& n);

enum class SigmaClass {
  FixedPoint,  // sigma(n) = n; happens exactly when the last digit is b-1
  AllOnesMax,  // sigma(n) is the largest number of its length
  Other,
};

SigmaClass classify_sigma(const Number& n);

/// Base 3 only: sigma(n) = 2 * n.
bool is_base3_perfect(const Number& n);

/// d, sigma, primality and prime-divisor sums for every number of at most
/// `max_length` digits, built by marking all products p * q once per divisor.
/// Values are indexed by their ordinary integer value.
class DivisorTable {
 public:
  DivisorTable(Base base, std::size_t max_length);

  Base base() const noexcept { return base_; }
  std::size_t max_length() const noexcept { return max_length_; }
  /// One past the largest covered value, b^max_length.
  std::uint64_t limit() const noexcept { return limit_; }

  std::uint32_t count(std::uint64_t n) const { return count_.at(n); }
  /// Value of sigma(n).
  std::uint64_t sigma(std::uint64_t n) const { return sigma_.at(n); }
  bool is_prime(std::uint64_t n) const { return prime_.at(n) != 0; }
  /// Value of the dismal sum of the distinct prime divisors of n.
  std::uint64_t prime_divisor_sum(std::uint64_t n) const { return prime_sum_.at(n); }

 private:
  std::uint64_t dismal_max(std::uint64_t a, std::uint64_t b) const;

  Base base_;
  std::size_t max_length_;
  std::uint64_t limit_;
  std::vector<Digit> digits_;  // max_length_ digits per value
  std::vector<std::uint32_t> count_;
  std::vector<std::uint64_t> sigma_;
  std::vector<std::uint8_t> prime_;
  std::vector<std::uint64_t> prime_sum_;
};

namespace detail {

/// Divisibility test on raw canonical digit spans, using caller scratch of at
/// least len(n) digits for the cofactor.
bool divides_digits(std::span<const Digit> p, std::span<const Digit> n, Digit unit, std::span<Digit> scratch) noexcept;

}  // namespace detail

}  // namespace dismal
