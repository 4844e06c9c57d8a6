#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "dismal/number.hpp"

namespace dismal {

using BigInt = boost::multiprecision::cpp_int;

/// An ordered list of positive parts.
struct Composition {
  std::vector<int> parts;

  int total() const noexcept;
  /// The first part is at least as large as every other part.
  bool first_dominant() const noexcept;
  friend bool operator==(const Composition&, const Composition&) = default;
};

/// Compositions of k into t parts whose first part is m and no part exceeds m.
BigInt gamma(int k, int t, int m);

/// Compositions of k into exactly t parts, none larger than the first.
BigInt first_dominant_count(int k, int t);

/// Number of divisors of the k-digit number 11...1 in base b, as
/// sum over t of first_dominant_count(k, t) * (b-1)^t.
BigInt d_ones(Base base, int k);

/// Binary divisor pair of the repunit of length total(c): p is 1 followed by
/// the blocks 0^(c_i - 1) 1 for the parts after the first (most significant
/// first), q is the repunit of length c_1. Throws DomainError unless c is
/// first-dominant.
std::pair<Number, Number> composition_to_divisor(const Composition& c);

/// Inverse of composition_to_divisor for a binary divisor p of the k-digit
/// repunit.
Composition divisor_to_composition(const Number& p, int k);

/// Exact coefficients of a power series, index = exponent.
struct SeriesTable {
  std::string name;
  std::vector<BigInt> coefficients;

  const BigInt& operator[](std::size_t i) const { return coefficients.at(i); }
  std::size_t size() const noexcept { return coefficients.size(); }
};

/// Coefficients 0..n of num(z)/den(z). den[0] must be 1.
std::vector<BigInt> expand_rational(const std::vector<BigInt>& num, const std::vector<BigInt>& den, std::size_t n);

/// D^(l)_0..D^(l)_n from (1-z)/(1-2z+z^(l-1)-z^l+z^(l+2)); l >= 3.
SeriesTable d_series(int l, std::size_t n);

/// M^(l)_0..M^(l)_h_max (index 0 is 0). l = 1 and 2 use their closed values,
/// l >= 3 the generating function z(1-z)^2/(1-2z+z^(l-1)-z^l+z^(l+2)).
SeriesTable m_series(int l, std::size_t h_max);

/// M^(l) from the linear recurrence and its initial values; l >= 3.
std::vector<BigInt> m_series_recurrence(int l, std::size_t h_max);

/// M^(l)_h as sum of D^(l)_(h-j), j in {3, ..., l-1, l+1, l+2}; l >= 3.
std::vector<BigInt> m_series_from_d(int l, std::size_t h_max);

/// Product-of-Fibonacci closed form for M^(3)_h, with F_-1 = 1.
BigInt m3_fibonacci(int h);

/// d_2(2^k - 1) for k = 0..n (index 0 is 0).
SeriesTable d2_ones_series(std::size_t n);

/// z + z^3/(1-z) + sum over l >= 3 of z^(l-1) M^(l)(z), to z^n. The
/// coefficient of z^k is d_2(2^k - 3) for k >= 3.
SeriesTable d2_minus3_series(std::size_t n);

struct AsymptoticRow {
  int k = 0;
  BigInt ones;    // d_2(2^k - 1)
  BigInt minus3;  // d_2(2^k - 3)
  double ratio = 0;  // minus3 / ones
  double theta = 0;  // ones * k ln 2 / 2^k - 1
};

/// Rows for k = 3..n.
std::vector<AsymptoticRow> asymptotic_report(std::size_t n);

}  // namespace dismal
