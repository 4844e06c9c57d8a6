#include "dismal/squares.hpp"

#include <algorithm>
#include <string>

namespace dismal {

Number square(const Number& n) { return mul(n, n); }

std::vector<Number> SquareCensus::repeated() const {
  std::vector<Number> out;
  for (const auto& [v, m] : multiplicity) {
    if (m > 1) out.push_back(Number::from_value(v, base));
  }
  return out;
}

SquareCensus square_census(Base base, std::size_t L, std::uint64_t max_roots) {
  if (L % 2 == 0) throw DomainError("square lengths are odd");
  const std::size_t m = (L + 1) / 2;
  const auto b = static_cast<std::uint64_t>(base.radix());
  std::uint64_t lo = 0, hi = 0;
  try {
    lo = detail::checked_pow(b, static_cast<unsigned>(m - 1));
    hi = detail::checked_pow(b, static_cast<unsigned>(m));
    (void)detail::checked_pow(b, static_cast<unsigned>(L));
  } catch (const OverflowError&) {
    throw BudgetExceeded("squares of length " + std::to_string(L) + " exceed 64 bits");
  }
  if (m == 1) lo = 0;
  if (hi - lo > max_roots) throw BudgetExceeded(std::to_string(hi - lo) + " roots exceed budget");

  SquareCensus c{base, L, 0, {}};
  std::vector<Digit> d(m), prod(L);
  for (std::uint64_t r = lo; r < hi; ++r) {
    std::uint64_t x = r;
    for (std::size_t i = 0; i < m; ++i, x /= b) d[i] = static_cast<Digit>(x % b);
    detail::mul_digits(d, d, prod);
    std::uint64_t v = 0;
    for (std::size_t i = L; i-- > 0;) v = v * b + prod[i];
    ++c.multiplicity[v];
  }
  c.distinct = c.multiplicity.size();
  return c;
}

std::uint64_t allones_sqrt_count(int k) {
  if (k < 0) throw DomainError("k must be nonnegative");
  if (k > 40) throw BudgetExceeded("square-root search beyond k = 40");
  const int m = k + 1;  // root length
  const int cols = 2 * k + 1;
  // Bits of p assigned so far and their values; unassigned bits count as 1
  // when testing whether a column can still be covered.
  std::uint64_t known = 0, value = 0;
  auto alive = [&](int c) {
    const std::uint64_t possible = value | ~known;
    for (int i = std::max(0, c - k); 2 * i <= c; ++i) {
      if (((possible >> i) & 1) && ((possible >> (c - i)) & 1)) return true;
    }
    return false;
  };
  std::uint64_t count = 0;
  // Assign positions outside-in: lo, hi = m-1-lo.
  auto rec = [&](auto&& self, int lo) -> void {
    const int hi = m - 1 - lo;
    if (lo > hi) {
      for (int c = 0; c < cols; ++c) {
        if (!alive(c)) return;
      }
      ++count;
      return;
    }
    const std::uint64_t bits = (std::uint64_t{1} << lo) | (std::uint64_t{1} << hi);
    for (int vlo = 0; vlo <= 1; ++vlo) {
      for (int vhi = 0; vhi <= 1; ++vhi) {
        if (lo == hi && vlo != vhi) continue;
        known |= bits;
        value = (value & ~bits) | (std::uint64_t(vlo) << lo) | (std::uint64_t(vhi) << hi);
        // Columns lo and cols-1-lo are now fully determined.
        if (alive(lo) && alive(cols - 1 - lo)) self(self, lo + 1);
        known &= ~bits;
        value &= ~bits;
      }
    }
  };
  rec(rec, 0);
  return count;
}

RootReport square_roots(const Number& n, std::uint64_t max_nodes) {
  RootReport report;
  const Base base = n.base();
  if (n.is_zero()) {
    report.roots.push_back(Number(base));
    report.dominating = Number(base);
    return report;
  }
  const std::size_t L = n.length();
  if (L % 2 == 0) return report;
  const std::size_t m = (L + 1) / 2;
  const auto nd = n.digits();
  std::vector<Digit> p(m, 0);
  std::uint64_t nodes = 0;

  // Assign p_0, p_1, ... in turn; column t is complete once p_t is set.
  auto rec = [&](auto&& self, std::size_t t) -> void {
    if (++nodes > max_nodes) throw BudgetExceeded("square-root search exceeded " + std::to_string(max_nodes) + " nodes");
    if (t == m) {
      for (std::size_t c = m; c < L; ++c) {
        Digit col = 0;
        for (std::size_t i = c - (m - 1); i < m; ++i) col = std::max(col, std::min(p[i], p[c - i]));
        if (col != nd[c]) return;
      }
      report.roots.emplace_back(base, p);
      return;
    }
    const Digit top = nd[2 * t];
    for (int d = (t + 1 == m) ? 1 : 0; d <= top; ++d) {
      p[t] = static_cast<Digit>(d);
      bool ok = true;
      Digit col = 0;
      for (std::size_t i = 0; i <= t && ok; ++i) {
        const Digit x = std::min(p[i], p[t - i]);
        col = std::max(col, x);
        // p_i p_t also feeds column i + t, which must not be exceeded.
        if (std::min(p[i], p[t]) > nd[i + t]) ok = false;
      }
      if (ok && col == nd[t]) self(self, t + 1);
    }
    p[t] = 0;
  };
  rec(rec, 0);
  std::sort(report.roots.begin(), report.roots.end());
  for (const Number& r : report.roots) {
    if (std::all_of(report.roots.begin(), report.roots.end(), [&](const Number& o) { return dominates(o, r); })) {
      report.dominating = r;
      break;
    }
  }
  return report;
}

std::optional<Number> dominating_root(const Number& n) { return square_roots(n).dominating; }

}  // namespace dismal
