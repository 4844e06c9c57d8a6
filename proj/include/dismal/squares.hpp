#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "dismal/number.hpp"

namespace dismal {

Number square(const Number& n);

/// Squares of all roots of one length. Every square of an m-digit number has
/// 2m - 1 digits; length 1 includes 0.
struct SquareCensus {
  Base base;
  std::size_t length = 0;  // odd
  std::uint64_t distinct = 0;
  std::map<std::uint64_t, std::uint32_t> multiplicity;  // value of square -> roots

  /// Squares with at least two roots, ascending.
  std::vector<Number> repeated() const;
};

/// Throws DomainError for even L and BudgetExceeded beyond `max_roots` roots.
SquareCensus square_census(Base base, std::size_t L, std::uint64_t max_roots = std::uint64_t{1} << 24);

/// Number of binary p with p * p equal to the 2k+1 digit repunit.
std::uint64_t allones_sqrt_count(int k);

struct RootReport {
  std::vector<Number> roots;  // ascending
  /// The root dominating all the others, when there is one.
  std::optional<Number> dominating;
};

/// All square roots of n. Throws BudgetExceeded after `max_nodes` search nodes.
RootReport square_roots(const Number& n, std::uint64_t max_nodes = 50'000'000);

/// Root of n dominating every other root, if any.
std::optional<Number> dominating_root(const Number& n);

}  // namespace dismal
