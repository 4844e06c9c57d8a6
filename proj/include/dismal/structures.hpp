#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "dismal/genfunc.hpp"
#include "dismal/number.hpp"

namespace dismal {

/// Ranks in the divisibility order of every positive number with at most
/// `bound` digits. The rank is the length of the longest divisor chain from
/// the unit b-1.
class PosetView {
 public:
  PosetView(Base base, std::size_t bound);

  Base base() const noexcept { return base_; }
  std::size_t bound() const noexcept { return bound_; }
  /// Throws DomainError for 0 or numbers longer than the bound.
  int rank(const Number& n) const;
  /// All covered numbers of rank r, ascending.
  std::vector<Number> of_rank(int r) const;

 private:
  Base base_;
  std::size_t bound_;
  std::vector<std::uint8_t> rank_;  // indexed by value
};

/// Divisors shared by a and b, ascending. Both must be nonzero.
std::vector<Number> common_divisors(const Number& a, const Number& b);

/// The only common divisor is the unit.
bool is_rel_prime(const Number& a, const Number& b);

/// Greatest common divisor in the divisibility order, if one exists.
std::optional<Number> meet(const Number& a, const Number& b);

enum class JoinStatus {
  Absent,     // two incomparable minimal common multiples exist
  Candidate,  // unique minimal common multiple within the bound
  Unknown,    // no common multiple within the bound
};

struct JoinResult {
  JoinStatus status = JoinStatus::Unknown;
  std::vector<Number> minimal;  // minimal common multiples found, ascending
  /// The join when status is Candidate.
  std::optional<Number> value() const;
};

/// Least common multiple search over multiples of at most `max_length` digits.
/// A Candidate is the join if any join exists.
JoinResult join(const Number& a, const Number& b, std::size_t max_length);

/// Count of m with 1 <= m < b^len(n) relatively prime to n.
std::uint64_t phi(const Number& n, std::uint64_t budget = std::uint64_t{1} << 24);

/// Number of sets of distinct nonzero numbers whose dismal sum is n, by the
/// inclusion-exclusion sum over digit positions. p(0) = 1.
BigInt partition_count(const Number& n);

/// Same count by enumerating subsets of the nonzero x dominated by n. Throws
/// BudgetExceeded when the product of (n_i + 1) exceeds 21.
std::uint64_t partition_count_bruteforce(const Number& n);

/// Set covers of a labeled w-set.
BigInt setcover_count(int w);

enum class AdditiveClass {
  AdditivePrime,    // exactly one partition: 0, 1, 10, 100, ...
  AdditivePerfect,  // n is the sum of all the x it dominates
};

AdditiveClass additive_classification(const Number& n);

}  // namespace dismal
