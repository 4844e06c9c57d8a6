#include "dismal/divisors.hpp"

#include <algorithm>
#include <string>

namespace dismal {

namespace detail {

namespace {

// Fills q (size len(n) - len(p) + 1) with the maximal candidate cofactor.
void fill_max_cofactor(std::span<const Digit> p, std::span<const Digit> n, Digit unit, std::span<Digit> q) noexcept {
  for (std::size_t j = 0; j < q.size(); ++j) {
    Digit v = unit;
    for (std::size_t i = 0; i < p.size(); ++i) {
      const Digit nc = n[i + j];
      if (p[i] > nc && nc < v) v = nc;
    }
    q[j] = v;
  }
}

// Column-by-column comparison of p * q against n with early exit.
bool product_equals(std::span<const Digit> p, std::span<const Digit> q, std::span<const Digit> n) noexcept {
  for (std::size_t c = 0; c < n.size(); ++c) {
    Digit col = 0;
    const std::size_t i_lo = c >= q.size() ? c - q.size() + 1 : 0;
    const std::size_t i_hi = std::min(c, p.size() - 1);
    for (std::size_t i = i_lo; i <= i_hi; ++i) {
      const Digit m = std::min(p[i], q[c - i]);
      if (m > col) col = m;
    }
    if (col != n[c]) return false;
  }
  return true;
}

}  // namespace

bool divides_digits(std::span<const Digit> p, std::span<const Digit> n, Digit unit, std::span<Digit> scratch) noexcept {
  if (p.empty() || n.empty() || p.size() > n.size()) return false;
  // The ends of the product are min(p_0, q_0) and min(p_top, q_top).
  if (p.front() < n.front() || p.back() < n.back()) return false;
  auto q = scratch.first(n.size() - p.size() + 1);
  fill_max_cofactor(p, n, unit, q);
  return product_equals(p, q, n);
}

}  // namespace detail

std::optional<Number> max_cofactor(const Number& p, const Number& n) {
  detail::require_same_base(p, n);
  if (p.is_zero() || n.is_zero()) throw DomainError("max_cofactor needs nonzero operands");
  if (p.length() > n.length()) {
    throw DomainError("divisor " + p.to_string() + " is longer than " + n.to_string());
  }
  std::vector<Digit> q(n.length() - p.length() + 1);
  detail::fill_max_cofactor(p.digits(), n.digits(), n.base().unit_digit(), q);
  if (!detail::product_equals(p.digits(), q, n.digits())) return std::nullopt;
  return Number(n.base(), std::move(q));
}

bool divides(const Number& p, const Number& n) {
  detail::require_same_base(p, n);
  if (n.is_zero()) return true;
  if (p.is_zero() || p.length() > n.length()) return false;
  std::vector<Digit> scratch(n.length());
  return detail::divides_digits(p.digits(), n.digits(), n.base().unit_digit(), scratch);
}

DivisorReport divisor_list(const Number& n, std::uint64_t max_candidates) {
  if (n.is_zero()) throw DomainError("0 has infinitely many divisors");
  const Base base = n.base();
  const int b = base.radix();
  const std::size_t k = n.length();

  std::uint64_t candidates = 0;
  try {
    candidates = detail::checked_pow(static_cast<std::uint64_t>(b), static_cast<unsigned>(k));
  } catch (const OverflowError&) {
    candidates = max_candidates + 1;
  }
  if (candidates > max_candidates) {
    throw BudgetExceeded("divisor enumeration of " + n.to_string() + " needs about " + std::to_string(b) + "^" +
                         std::to_string(k) + " candidates");
  }

  DivisorReport report{n, {}, 0, Number(base)};
  std::vector<Digit> scratch(k);
  std::vector<Digit> p;
  const auto nd = n.digits();
  for (std::size_t r = 1; r <= k; ++r) {
    // Odometer over r-digit candidates; the leading digit never wraps to 0.
    p.assign(r, 0);
    p.back() = 1;
    bool more = true;
    while (more) {
      if (detail::divides_digits(p, nd, base.unit_digit(), scratch)) {
        report.divisors.emplace_back(base, p);
      }
      std::size_t i = 0;
      while (i < r && ++p[i] == b) p[i++] = 0;
      more = i < r;
    }
  }
  std::sort(report.divisors.begin(), report.divisors.end());
  report.count = report.divisors.size();
  for (const Number& d : report.divisors) report.sigma = add(report.sigma, d);
  return report;
}

std::uint64_t divisor_count(const Number& n) { return divisor_list(n).count; }

Number divisor_sum(const Number& n) { return divisor_list(n).sigma; }

SigmaClass classify_sigma(const Number& n) {
  const Number s = divisor_sum(n);
  if (s == n) return SigmaClass::FixedPoint;
  if (s == all_units(n.base(), n.length())) return SigmaClass::AllOnesMax;
  return SigmaClass::Other;
}

bool is_base3_perfect(const Number& n) {
  if (n.base() != Base{3}) throw DomainError("base-3 perfect numbers need a base-3 argument");
  return divisor_sum(n) == mul(Number(n.base(), {2}), n);
}

DivisorTable::DivisorTable(Base base, std::size_t max_length)
    : base_(base), max_length_(max_length), limit_(detail::checked_pow(static_cast<std::uint64_t>(base.radix()),
                                                                        static_cast<unsigned>(max_length))) {
  constexpr std::uint64_t kMaxEntries = 1u << 22;
  if (max_length == 0 || limit_ > kMaxEntries) {
    throw BudgetExceeded("divisor table of " + std::to_string(limit_) + " entries exceeds budget");
  }
  const std::uint64_t b = static_cast<std::uint64_t>(base.radix());
  const std::size_t L = max_length;
  const Digit unit = base.unit_digit();

  digits_.assign(limit_ * L, 0);
  std::vector<std::uint8_t> length(limit_, 0);
  for (std::uint64_t v = 1; v < limit_; ++v) {
    std::uint64_t x = v;
    std::uint8_t len = 0;
    while (x != 0) {
      digits_[v * L + len++] = static_cast<Digit>(x % b);
      x /= b;
    }
    length[v] = len;
  }
  std::vector<std::uint64_t> pow(L + 1, 1);
  for (std::size_t i = 1; i <= L; ++i) pow[i] = pow[i - 1] * b;

  count_.assign(limit_, 0);
  sigma_.assign(limit_, 0);
  prime_.assign(limit_, 0);
  prime_sum_.assign(limit_, 0);

  std::vector<std::uint64_t> marker(limit_, 0);
  std::vector<Digit> prod(2 * L);
  auto span_of = [&](std::uint64_t v) { return std::span<const Digit>(&digits_[v * L], length[v]); };

  // Marks every multiple of p that fits, once per multiple.
  auto for_each_multiple = [&](std::uint64_t p, auto&& visit) {
    const auto pd = span_of(p);
    const std::uint64_t q_limit = pow[L - pd.size() + 1];
    for (std::uint64_t q = 1; q < q_limit; ++q) {
      const auto qd = span_of(q);
      const std::size_t len = pd.size() + qd.size() - 1;
      detail::mul_digits(pd, qd, std::span<Digit>(prod.data(), len));
      std::uint64_t m = 0;
      for (std::size_t c = len; c-- > 0;) m = m * b + prod[c];
      if (marker[m] != p) {
        marker[m] = p;
        visit(m);
      }
    }
  };

  for (std::uint64_t p = 1; p < limit_; ++p) {
    for_each_multiple(p, [&](std::uint64_t m) {
      ++count_[m];
      sigma_[m] = dismal_max(sigma_[m], p);
    });
  }
  for (std::uint64_t v = 1; v < limit_; ++v) {
    const auto d = span_of(v);
    const bool has_unit = std::find(d.begin(), d.end(), unit) != d.end();
    prime_[v] = (has_unit && v != unit && count_[v] == 2) ? 1 : 0;
  }
  std::fill(marker.begin(), marker.end(), 0);
  for (std::uint64_t p = 1; p < limit_; ++p) {
    if (!prime_[p]) continue;
    for_each_multiple(p, [&](std::uint64_t m) { prime_sum_[m] = dismal_max(prime_sum_[m], p); });
  }
}

std::uint64_t DivisorTable::dismal_max(std::uint64_t a, std::uint64_t b) const {
  const std::size_t L = max_length_;
  const std::uint64_t radix = static_cast<std::uint64_t>(base_.radix());
  std::uint64_t out = 0;
  for (std::size_t c = L; c-- > 0;) {
    out = out * radix + std::max(digits_[a * L + c], digits_[b * L + c]);
  }
  return out;
}

}  // namespace dismal
