#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "dismal/number.hpp"

namespace dismal {

enum class SequenceId {
  Even2xN,            // 2 * n
  EvenSmallestPrime,  // 1(b-1) * n
  Squares,            // n * n
  Triangular,         // 0 + 1 + ... + n
  Factorials,         // 1 * 2 * ... * n, n >= 1
  Primes,             // i-th prime, i >= 1
  DCount,             // number of divisors of n
  Sigma,              // sum of divisors of n
  Phi,                // totient of n
  Partitions,         // partitions of n
  SquareCounts,       // distinct squares of length 2i - 1
  SqrtCounts,         // square roots of the binary repunit of length 2k + 1
  DOnesSeries,        // d_2(2^k - 1)
  DMinus3Series,      // coefficients of the d_2(2^k - 3) series
};

std::span<const SequenceId> all_sequences() noexcept;
std::string_view sequence_name(SequenceId id) noexcept;
/// Case-sensitive match on sequence_name; throws ParseError.
SequenceId parse_sequence_id(std::string_view name);

/// One term: dismal results are written as their ordinary decimal value.
struct Term {
  std::uint64_t index = 0;
  std::string value;
  friend bool operator==(const Term&, const Term&) = default;
};

/// Calls `emit` for each index in [start, end] in order. Terms computed before
/// a BudgetExceeded are already emitted when it propagates.
void for_each_term(SequenceId id, Base base, std::uint64_t start, std::uint64_t end,
                   const std::function<void(const Term&)>& emit);

std::vector<Term> sequence_terms(SequenceId id, Base base, std::uint64_t start, std::uint64_t end);

/// "index value" lines with '\n' endings, preceded by '#' comment lines.
void write_bfile(std::ostream& out, std::span<const Term> terms, std::string_view comment = {});

/// Parses b-file text. Blank lines and '#' comments are skipped. Throws
/// ParseError for malformed lines and for indices that are not consecutive.
std::vector<Term> read_bfile(std::istream& in);

struct Mismatch {
  std::uint64_t index = 0;
  std::string expected;  // from the reference
  std::string actual;    // computed, empty when missing
};

/// First reference term whose index is missing from `computed` or whose value
/// differs.
std::optional<Mismatch> compare_terms(std::span<const Term> computed, std::span<const Term> reference);

}  // namespace dismal
