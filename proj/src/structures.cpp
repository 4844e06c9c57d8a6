#include "dismal/structures.hpp"

#include <algorithm>
#include <string>

#include "dismal/divisors.hpp"

namespace dismal {

namespace {

void require_nonzero(const Number& a, const Number& b) {
  detail::require_same_base(a, b);
  if (a.is_zero() || b.is_zero()) throw DomainError("operands must be nonzero");
}

// Elements of xs not properly dividing (want_max) or properly divisible by
// (!want_max) another element.
std::vector<Number> extremal(const std::vector<Number>& xs, bool want_max) {
  std::vector<Number> out;
  for (const Number& x : xs) {
    bool extreme = true;
    for (const Number& y : xs) {
      if (x == y) continue;
      if (want_max ? divides(x, y) : divides(y, x)) {
        extreme = false;
        break;
      }
    }
    if (extreme) out.push_back(x);
  }
  return out;
}

std::vector<Digit> digits_of(std::uint64_t v, std::uint64_t b) {
  std::vector<Digit> d;
  for (; v != 0; v /= b) d.push_back(static_cast<Digit>(v % b));
  return d;
}

}  // namespace

PosetView::PosetView(Base base, std::size_t bound) : base_(base), bound_(bound) {
  const auto b = static_cast<std::uint64_t>(base.radix());
  if (bound == 0) throw DomainError("poset bound must be at least one digit");
  std::uint64_t limit = 0;
  try {
    limit = detail::checked_pow(b, static_cast<unsigned>(bound));
  } catch (const OverflowError&) {
    limit = ~std::uint64_t{0};
  }
  if (limit > (std::uint64_t{1} << 22)) throw BudgetExceeded("poset of " + std::to_string(limit) + " numbers");
  rank_.assign(limit, 0);

  // Visit by length ascending, then value descending: every divisor of p is
  // either shorter or a same-length number with larger value.
  std::vector<std::vector<Digit>> digits(limit);
  for (std::uint64_t v = 1; v < limit; ++v) digits[v] = digits_of(v, b);
  std::vector<Digit> prod(2 * bound);
  std::uint64_t lo = 1;
  for (std::size_t len = 1; len <= bound; ++len, lo *= b) {
    for (std::uint64_t p = lo * b - 1; p >= lo; --p) {
      const std::uint64_t q_limit = detail::checked_pow(b, static_cast<unsigned>(bound - len + 1));
      for (std::uint64_t q = 1; q < q_limit; ++q) {
        const std::size_t n = len + digits[q].size() - 1;
        detail::mul_digits(digits[p], digits[q], std::span<Digit>(prod.data(), n));
        std::uint64_t m = 0;
        for (std::size_t c = n; c-- > 0;) m = m * b + prod[c];
        if (m != p && rank_[m] < rank_[p] + 1) rank_[m] = static_cast<std::uint8_t>(rank_[p] + 1);
      }
    }
  }
}

int PosetView::rank(const Number& n) const {
  if (n.base() != base_) throw BaseMismatch("number and poset have different bases");
  if (n.is_zero() || n.length() > bound_) {
    throw DomainError(n.to_string() + " is outside the poset bound of " + std::to_string(bound_) + " digits");
  }
  return rank_[n.value()];
}

std::vector<Number> PosetView::of_rank(int r) const {
  std::vector<Number> out;
  for (std::uint64_t v = 1; v < rank_.size(); ++v) {
    if (rank_[v] == r) out.push_back(Number::from_value(v, base_));
  }
  return out;
}

std::vector<Number> common_divisors(const Number& a, const Number& b) {
  require_nonzero(a, b);
  std::vector<Number> out;
  for (const Number& d : divisor_list(a).divisors) {
    if (divides(d, b)) out.push_back(d);
  }
  return out;
}

bool is_rel_prime(const Number& a, const Number& b) {
  const auto common = common_divisors(a, b);
  return common.size() == 1 && common.front().is_unit();
}

std::optional<Number> meet(const Number& a, const Number& b) {
  const auto top = extremal(common_divisors(a, b), true);
  if (top.size() != 1) return std::nullopt;
  return top.front();
}

std::optional<Number> JoinResult::value() const {
  if (status != JoinStatus::Candidate) return std::nullopt;
  return minimal.front();
}

JoinResult join(const Number& a, const Number& b, std::size_t max_length) {
  require_nonzero(a, b);
  const Base base = a.base();
  const auto radix = static_cast<std::uint64_t>(base.radix());
  std::vector<Number> common;
  if (a.length() <= max_length) {
    const std::size_t q_len = max_length - a.length() + 1;
    const std::uint64_t q_limit = detail::checked_pow(radix, static_cast<unsigned>(q_len));
    if (q_limit > (std::uint64_t{1} << 24)) throw BudgetExceeded("join search space too large");
    for (std::uint64_t q = 1; q < q_limit; ++q) {
      Number m = mul(a, Number::from_value(q, base));
      if (divides(b, m)) common.push_back(std::move(m));
    }
  }
  std::sort(common.begin(), common.end());
  common.erase(std::unique(common.begin(), common.end()), common.end());
  JoinResult r;
  r.minimal = extremal(common, false);
  if (r.minimal.empty()) {
    r.status = JoinStatus::Unknown;
  } else if (r.minimal.size() == 1) {
    r.status = JoinStatus::Candidate;
  } else {
    r.status = JoinStatus::Absent;
  }
  return r;
}

std::uint64_t phi(const Number& n, std::uint64_t budget) {
  if (n.is_zero()) throw DomainError("phi(0) is undefined");
  const Base base = n.base();
  const auto b = static_cast<std::uint64_t>(base.radix());
  const std::size_t k = n.length();
  const std::uint64_t limit = detail::checked_pow(b, static_cast<unsigned>(k));
  if (limit > budget) throw BudgetExceeded("phi needs " + std::to_string(limit) + " candidates");

  std::vector<std::uint8_t> shared(limit, 0);
  std::vector<Digit> prod(2 * k);
  for (const Number& c : divisor_list(n).divisors) {
    if (c.is_unit()) continue;
    const std::uint64_t q_limit = detail::checked_pow(b, static_cast<unsigned>(k - c.length() + 1));
    for (std::uint64_t q = 1; q < q_limit; ++q) {
      const auto qd = digits_of(q, b);
      const std::size_t len = c.length() + qd.size() - 1;
      detail::mul_digits(c.digits(), qd, std::span<Digit>(prod.data(), len));
      std::uint64_t m = 0;
      for (std::size_t i = len; i-- > 0;) m = m * b + prod[i];
      shared[m] = 1;
    }
  }
  return static_cast<std::uint64_t>(std::count(shared.begin() + 1, shared.end(), std::uint8_t{0}));
}

BigInt partition_count(const Number& n) {
  if (n.is_zero()) return 1;
  const std::size_t k = n.length();
  if (k > 20) throw BudgetExceeded("partition count over more than 20 digits");
  BigInt sum = 0;
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << k); ++s) {
    std::uint64_t exponent = 1;
    for (std::size_t i = 0; i < k; ++i) {
      const bool inside = (s >> i) & 1;
      exponent *= n.digit(i) + (inside ? 0 : 1);
      if (exponent > (std::uint64_t{1} << 24)) throw BudgetExceeded("partition count of " + n.to_string() + " is too large");
    }
    const BigInt term = BigInt(1) << exponent;
    if (__builtin_popcountll(s) % 2 == 0) {
      sum += term;
    } else {
      sum -= term;
    }
  }
  return sum / 2;
}

std::uint64_t partition_count_bruteforce(const Number& n) {
  if (n.is_zero()) return 1;
  std::uint64_t cells = 1;
  for (Digit d : n.digits()) cells *= d + 1;
  if (cells > 21) throw BudgetExceeded("brute-force partitions need prod(n_i + 1) <= 21");

  // Every x dominated by n, as a mask of (position, level) cells: bit
  // offset(i) + v - 1 is set when x_i >= v. Dismal sums become bitwise ORs.
  std::vector<unsigned> offset(n.length() + 1, 0);
  for (std::size_t i = 0; i < n.length(); ++i) offset[i + 1] = offset[i] + n.digit(i);
  const std::uint64_t full = (std::uint64_t{1} << offset.back()) - 1;
  std::vector<std::uint64_t> parts;
  std::vector<Digit> x(n.length(), 0);
  while (true) {
    std::size_t i = 0;
    while (i < x.size() && x[i] == n.digit(i)) x[i++] = 0;
    if (i == x.size()) break;
    ++x[i];
    std::uint64_t mask = 0;
    for (std::size_t j = 0; j < x.size(); ++j) mask |= ((std::uint64_t{1} << x[j]) - 1) << offset[j];
    parts.push_back(mask);
  }
  // Each subset of parts, visited by include/exclude recursion.
  std::uint64_t count = 0;
  auto visit = [&](auto&& self, std::size_t j, std::uint64_t acc) -> void {
    if (j == parts.size()) {
      count += acc == full;
      return;
    }
    self(self, j + 1, acc);
    self(self, j + 1, acc | parts[j]);
  };
  visit(visit, 0, 0);
  return count;
}

BigInt setcover_count(int w) {
  if (w < 1) throw DomainError("set covers need w >= 1");
  BigInt sum = 0, binom = 1;
  for (int i = 0; i <= w; ++i) {
    if (i > 0) binom = binom * (w - i + 1) / i;
    const BigInt term = binom * (BigInt(1) << (std::size_t{1} << i));
    if ((w - i) % 2 == 0) {
      sum += term;
    } else {
      sum -= term;
    }
  }
  return sum / 2;
}

AdditiveClass additive_classification(const Number& n) {
  return partition_count(n) == 1 ? AdditiveClass::AdditivePrime : AdditiveClass::AdditivePerfect;
}

}  // namespace dismal
