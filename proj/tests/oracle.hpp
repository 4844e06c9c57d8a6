#pragma once
// Slow reference implementations on plain integer values, independent of the
// library's digit-vector code.

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <vector>

namespace oracle {

inline std::vector<int> digits(std::uint64_t v, int b) {
  std::vector<int> d;
  for (; v; v /= static_cast<std::uint64_t>(b)) d.push_back(static_cast<int>(v % static_cast<std::uint64_t>(b)));
  return d;
}

inline std::uint64_t value(const std::vector<int>& d, int b) {
  std::uint64_t v = 0;
  for (auto it = d.rbegin(); it != d.rend(); ++it) v = v * static_cast<std::uint64_t>(b) + static_cast<std::uint64_t>(*it);
  return v;
}

inline int length(std::uint64_t v, int b) { return static_cast<int>(digits(v, b).size()); }

inline std::uint64_t pow(int b, int e) {
  std::uint64_t r = 1;
  while (e-- > 0) r *= static_cast<std::uint64_t>(b);
  return r;
}

inline std::uint64_t add(std::uint64_t x, std::uint64_t y, int b) {
  auto a = digits(x, b), c = digits(y, b);
  a.resize(std::max(a.size(), c.size()));
  for (std::size_t i = 0; i < c.size(); ++i) a[i] = std::max(a[i], c[i]);
  return value(a, b);
}

// Schoolbook: each partial product is x with digits clipped by one digit of y,
// shifted, and the partials are combined with add.
inline std::uint64_t mul(std::uint64_t x, std::uint64_t y, int b) {
  const auto c = digits(y, b);
  std::uint64_t acc = 0;
  for (std::size_t j = 0; j < c.size(); ++j) {
    auto a = digits(x, b);
    for (auto& d : a) d = std::min(d, c[j]);
    a.insert(a.begin(), j, 0);
    acc = add(acc, value(a, b), b);
  }
  return acc;
}

// Every product of two numbers of at most k digits, keyed by product, with the
// set of left factors.
struct ProductTable {
  int base;
  int k;
  std::map<std::uint64_t, std::set<std::uint64_t>> factors;

  ProductTable(int b, int max_len) : base(b), k(max_len) {
    const std::uint64_t lim = pow(b, max_len);
    for (std::uint64_t p = 1; p < lim; ++p) {
      const int lp = length(p, b);
      const std::uint64_t qlim = pow(b, max_len - lp + 1);
      for (std::uint64_t q = 1; q < qlim; ++q) {
        const auto r = mul(p, q, b);
        if (length(r, b) <= max_len) factors[r].insert(p);
      }
    }
  }

  std::vector<std::uint64_t> divisors(std::uint64_t n) const {
    auto it = factors.find(n);
    if (it == factors.end()) return {};
    return {it->second.begin(), it->second.end()};
  }

  // Not the unit, and every factorization uses the unit.
  bool is_prime(std::uint64_t n) const {
    const std::uint64_t unit = static_cast<std::uint64_t>(base - 1);
    if (n == 0 || n == unit) return false;
    for (auto p : divisors(n)) {
      if (p != unit && p != n) return false;
    }
    // n = n * q with a single digit q other than the unit.
    for (std::uint64_t q = 1; q < unit; ++q) {
      if (q != unit && mul(n, q, base) == n) return false;
    }
    return true;
  }
};

}  // namespace oracle
