#include "dismal/genfunc.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace dismal {

namespace {

// Compositions of n into exactly t parts, each in [1, max_part].
BigInt bounded_compositions(int n, int t, int max_part) {
  if (t == 0) return n == 0 ? 1 : 0;
  if (n < t || max_part < 1) return 0;
  // ways[s] = compositions of s into the parts placed so far
  std::vector<BigInt> ways(n + 1, 0), next(n + 1);
  ways[0] = 1;
  for (int j = 0; j < t; ++j) {
    std::fill(next.begin(), next.end(), BigInt(0));
    for (int s = 0; s <= n; ++s) {
      if (ways[s] == 0) continue;
      for (int c = 1; c <= max_part && s + c <= n; ++c) next[s + c] += ways[s];
    }
    std::swap(ways, next);
  }
  return ways[n];
}

// 1 - 2z + z^(l-1) - z^l + z^(l+2)
std::vector<BigInt> m_denominator(int l) {
  std::vector<BigInt> den(l + 3, 0);
  den[0] += 1;
  den[1] -= 2;
  den[l - 1] += 1;
  den[l] -= 1;
  den[l + 2] += 1;
  return den;
}

void require_l3(int l) {
  if (l < 3) throw DomainError("l must be at least 3, got " + std::to_string(l));
}

// Shift by s and add into acc.
void add_shifted(std::vector<BigInt>& acc, const std::vector<BigInt>& s, std::size_t shift) {
  for (std::size_t i = 0; i < s.size() && i + shift < acc.size(); ++i) acc[i + shift] += s[i];
}

}  // namespace

int Composition::total() const noexcept {
  int s = 0;
  for (int p : parts) s += p;
  return s;
}

bool Composition::first_dominant() const noexcept {
  if (parts.empty()) return false;
  for (int p : parts) {
    if (p < 1 || p > parts.front()) return false;
  }
  return true;
}

BigInt gamma(int k, int t, int m) {
  if (k < 1 || t < 1 || t > k || m < 1 || m > k) {
    throw DomainError("gamma needs 1 <= t <= k and 1 <= m <= k");
  }
  return bounded_compositions(k - m, t - 1, m);
}

BigInt first_dominant_count(int k, int t) {
  if (k < 1 || t < 1 || t > k) throw DomainError("first_dominant_count needs 1 <= t <= k");
  BigInt sum = 0;
  for (int m = 1; m <= k; ++m) sum += gamma(k, t, m);
  return sum;
}

BigInt d_ones(Base base, int k) {
  if (k < 1) throw DomainError("d_ones needs k >= 1");
  const BigInt unit = base.radix() - 1;
  BigInt sum = 0, power = 1;
  for (int t = 1; t <= k; ++t) {
    power *= unit;
    sum += first_dominant_count(k, t) * power;
  }
  return sum;
}

std::pair<Number, Number> composition_to_divisor(const Composition& c) {
  if (!c.first_dominant()) throw DomainError("composition is not first-dominant");
  std::vector<Digit> msf{1};
  for (std::size_t i = 1; i < c.parts.size(); ++i) {
    msf.insert(msf.end(), static_cast<std::size_t>(c.parts[i] - 1), Digit{0});
    msf.push_back(1);
  }
  std::reverse(msf.begin(), msf.end());
  return {Number(kBinary, std::move(msf)), repunit(kBinary, static_cast<std::size_t>(c.parts.front()))};
}

Composition divisor_to_composition(const Number& p, int k) {
  if (p.base() != kBinary || p.is_zero()) throw DomainError("expected a nonzero binary number");
  const int len = static_cast<int>(p.length());
  if (len > k) throw DomainError(p.to_string() + " is longer than the repunit");
  Composition c{{k + 1 - len}};
  int zeros = 0;
  for (int i = len - 2; i >= 0; --i) {
    if (p.digit(static_cast<std::size_t>(i)) == 0) {
      ++zeros;
    } else {
      c.parts.push_back(zeros + 1);
      zeros = 0;
    }
  }
  if (zeros != 0 || !c.first_dominant()) {
    throw DomainError(p.to_string() + " does not divide the repunit of length " + std::to_string(k));
  }
  return c;
}

std::vector<BigInt> expand_rational(const std::vector<BigInt>& num, const std::vector<BigInt>& den, std::size_t n) {
  if (den.empty() || den[0] != 1) throw DomainError("denominator must have constant term 1");
  std::vector<std::size_t> support;
  for (std::size_t i = 1; i < den.size(); ++i) {
    if (den[i] != 0) support.push_back(i);
  }
  std::vector<BigInt> c(n + 1, 0);
  for (std::size_t i = 0; i <= n; ++i) {
    BigInt v = i < num.size() ? num[i] : BigInt(0);
    for (std::size_t j : support) {
      if (j > i) break;
      v -= den[j] * c[i - j];
    }
    c[i] = std::move(v);
  }
  return c;
}

SeriesTable d_series(int l, std::size_t n) {
  require_l3(l);
  return {"D" + std::to_string(l), expand_rational({1, -1}, m_denominator(l), n)};
}

SeriesTable m_series(int l, std::size_t h_max) {
  if (l < 1) throw DomainError("l must be at least 1");
  SeriesTable s{"M" + std::to_string(l), std::vector<BigInt>(h_max + 1, 0)};
  if (l == 1) {
    for (std::size_t h = 1; h <= h_max; ++h) s.coefficients[h] = h == 2 ? 0 : 1;
  } else if (l >= 3) {
    s.coefficients = expand_rational({0, 1, -2, 1}, m_denominator(l), h_max);
  }
  return s;
}

std::vector<BigInt> m_series_recurrence(int l, std::size_t h_max) {
  require_l3(l);
  std::vector<BigInt> m(h_max + 1, 0);
  for (std::size_t h = 1; h <= h_max; ++h) {
    const int hi = static_cast<int>(h);
    if (hi == 1) {
      m[h] = 1;
    } else if (hi == 2) {
      m[h] = 0;
    } else if (hi <= l - 1) {
      m[h] = BigInt(1) << (hi - 3);
    } else if (hi <= l + 1) {
      m[h] = (BigInt(1) << (hi - 3)) - 1;
    } else {
      for (int j = 1; j <= l - 2; ++j) m[h] += m[h - j];
      m[h] += m[h - l] + m[h - l - 1];
    }
  }
  return m;
}

std::vector<BigInt> m_series_from_d(int l, std::size_t h_max) {
  require_l3(l);
  const auto d = d_series(l, h_max).coefficients;
  std::vector<int> shifts;
  for (int j = 3; j <= l - 1; ++j) shifts.push_back(j);
  shifts.push_back(l + 1);
  shifts.push_back(l + 2);
  std::vector<BigInt> m(h_max + 1, 0);
  if (h_max >= 1) m[1] = 1;
  for (std::size_t h = 3; h <= h_max; ++h) {
    for (int j : shifts) {
      if (static_cast<std::size_t>(j) <= h) m[h] += d[h - j];
    }
  }
  return m;
}

BigInt m3_fibonacci(int h) {
  if (h < 1) throw DomainError("h must be at least 1");
  auto fib = [](int n) -> BigInt {
    if (n == -1) return 1;
    BigInt a = 0, b = 1;
    for (int i = 0; i < n; ++i) {
      a += b;
      std::swap(a, b);
    }
    return a;
  };
  return h % 2 == 0 ? fib((h - 2) / 2) * fib(h / 2) : fib((h - 3) / 2) * fib((h + 1) / 2);
}

SeriesTable d2_ones_series(std::size_t n) {
  SeriesTable s{"DOnes", std::vector<BigInt>(n + 1, 0)};
  for (std::size_t l = 1; l <= n; ++l) {
    std::vector<BigInt> den(l + 1, -1);
    den[0] = 1;
    add_shifted(s.coefficients, expand_rational({1}, den, n - l), l);
  }
  return s;
}

SeriesTable d2_minus3_series(std::size_t n) {
  SeriesTable s{"DMinus3", std::vector<BigInt>(n + 1, 0)};
  // l = 1 contributes z + z^3/(1-z); l = 2 contributes nothing.
  if (n >= 1) s.coefficients[1] += 1;
  for (std::size_t k = 3; k <= n; ++k) s.coefficients[k] += 1;
  for (std::size_t l = 3; l <= n; ++l) {
    add_shifted(s.coefficients, m_series(static_cast<int>(l), n + 1 - l).coefficients, l - 1);
  }
  return s;
}

std::vector<AsymptoticRow> asymptotic_report(std::size_t n) {
  const auto ones = d2_ones_series(n);
  const auto minus3 = d2_minus3_series(n);
  std::vector<AsymptoticRow> rows;
  for (std::size_t k = 3; k <= n; ++k) {
    AsymptoticRow r;
    r.k = static_cast<int>(k);
    r.ones = ones[k];
    r.minus3 = minus3[k];
    const double o = r.ones.convert_to<double>();
    r.ratio = r.minus3.convert_to<double>() / o;
    r.theta = o * static_cast<double>(k) * std::numbers::ln2 / std::ldexp(1.0, static_cast<int>(k)) - 1.0;
    rows.push_back(std::move(r));
  }
  return rows;
}

}  // namespace dismal
