#include "dismal/primes.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <unordered_map>

#include "dismal/divisors.hpp"

namespace dismal {

namespace {

// Distinct digits of n, ascending.
std::vector<Digit> digit_set(const Number& n) {
  std::vector<Digit> d(n.digits().begin(), n.digits().end());
  std::sort(d.begin(), d.end());
  d.erase(std::unique(d.begin(), d.end()), d.end());
  return d;
}

// True if n has a divisor of length r for some 2 <= r <= (k+1)/2. Candidate
// digits are drawn from the digits of n: any factorization can be pushed onto
// that alphabet by a digit map fixing the digits of n.
bool has_proper_factorization(const Number& n) {
  const std::size_t k = n.length();
  const auto alphabet = digit_set(n);
  const std::size_t a = alphabet.size();
  const Digit unit = n.base().unit_digit();
  std::vector<Digit> scratch(k);
  std::vector<std::size_t> idx;
  std::vector<Digit> p;
  const std::size_t first_nonzero = alphabet.front() == 0 ? 1 : 0;
  for (std::size_t r = 2; r <= (k + 1) / 2; ++r) {
    idx.assign(r, 0);
    idx.back() = first_nonzero;
    p.assign(r, 0);
    bool more = true;
    while (more) {
      for (std::size_t i = 0; i < r; ++i) p[i] = alphabet[idx[i]];
      if (detail::divides_digits(p, n.digits(), unit, scratch)) return true;
      std::size_t i = 0;
      while (i < r && ++idx[i] == a) {
        idx[i] = (i + 1 == r) ? first_nonzero : 0;
        ++i;
      }
      more = i < r;
    }
  }
  return false;
}

// Minimal-alphabet relabelling of a digit pattern given most significant first.
std::string canonical_pattern(const std::string& msf) {
  std::string sorted = msf;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  const int shift = (msf.front() == sorted.front()) ? 1 : 0;
  std::string out = msf;
  for (char& c : out) {
    const auto rank = std::lower_bound(sorted.begin(), sorted.end(), c) - sorted.begin();
    c = static_cast<char>('0' + rank + shift);
  }
  return out;
}

Number pattern_number(const std::string& msf) {
  const char hi = *std::max_element(msf.begin(), msf.end());
  return parse_digits(msf, Base{std::max(2, hi - '0' + 1)});
}

class TemplateFinder {
 public:
  explicit TemplateFinder(std::size_t k) : k_(k) {}

  std::vector<std::string> canonical_patterns() const {
    std::set<std::string> out;
    const int radix = static_cast<int>(k_) + 1;
    std::string s(k_, '0');
    std::vector<int> v(k_, 0);
    while (true) {
      if (v.back() != 0) {
        for (std::size_t i = 0; i < k_; ++i) s[k_ - 1 - i] = static_cast<char>('0' + v[i]);
        out.insert(canonical_pattern(s));
      }
      std::size_t i = 0;
      while (i < k_ && ++v[i] == radix) v[i++] = 0;
      if (i == k_) break;
    }
    return {out.begin(), out.end()};
  }

  // Patterns obtained by merging two adjacent digit classes.
  static std::vector<std::string> merges(const std::string& pattern) {
    std::string labels = pattern;
    std::sort(labels.begin(), labels.end());
    labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
    std::vector<std::string> out;
    for (std::size_t c = 0; c + 1 < labels.size(); ++c) {
      std::string merged = pattern;
      for (char& ch : merged) {
        if (ch == labels[c + 1]) ch = labels[c];
      }
      out.push_back(canonical_pattern(merged));
    }
    return out;
  }

  bool is_pseudoprime(const std::string& pattern) {
    if (auto it = pseudo_.find(pattern); it != pseudo_.end()) return it->second;
    bool result = false;
    for (const auto& m : merges(pattern)) {
      if (is_pseudoprime(m)) {
        result = true;
        break;
      }
    }
    if (!result) result = !has_proper_factorization(pattern_number(pattern));
    pseudo_.emplace(pattern, result);
    return result;
  }

  bool is_template(const std::string& pattern) {
    if (!is_pseudoprime(pattern)) return false;
    for (const auto& m : merges(pattern)) {
      if (is_pseudoprime(m)) return false;
    }
    return true;
  }

 private:
  std::size_t k_;
  std::unordered_map<std::string, bool> pseudo_;
};

// Depth-first promotion of a pattern, most significant position first. Each
// digit class keeps the range of digits assigned so far; classes must stay
// strictly ordered.
template <class Emit>
void promote(const Number& t, Base base, Emit&& emit) {
  const std::size_t k = t.length();
  if (k == 0) return;
  const auto labels = digit_set(t);
  const int classes = static_cast<int>(labels.size());
  const int b = base.radix();
  if (classes > b) return;
  std::vector<int> cls(k);
  for (std::size_t i = 0; i < k; ++i) {
    cls[i] = static_cast<int>(std::lower_bound(labels.begin(), labels.end(), t.digit(i)) - labels.begin());
  }
  std::vector<int> lo(classes, b), hi(classes, -1);
  std::vector<Digit> n(k, 0);

  auto rec = [&](auto&& self, std::size_t pos_from_top) -> void {
    if (pos_from_top == k) {
      emit(n);
      return;
    }
    const std::size_t x = k - 1 - pos_from_top;
    const int c = cls[x];
    int lower = c;
    int upper = b - classes + c;
    for (int o = 0; o < c; ++o) {
      if (hi[o] >= 0) lower = std::max(lower, hi[o] + 1);
    }
    for (int o = c + 1; o < classes; ++o) {
      if (hi[o] >= 0) upper = std::min(upper, lo[o] - 1);
    }
    if (x == k - 1) lower = std::max(lower, 1);
    const int saved_lo = lo[c], saved_hi = hi[c];
    for (int d = lower; d <= upper; ++d) {
      n[x] = static_cast<Digit>(d);
      lo[c] = std::min(saved_lo, d);
      hi[c] = std::max(saved_hi, d);
      self(self, pos_from_top + 1);
    }
    lo[c] = saved_lo;
    hi[c] = saved_hi;
  };
  rec(rec, 0);
}

}  // namespace

bool is_pseudoprime(const Number& n) {
  if (n.length() < 2) throw DomainError("pseudoprimes have at least two digits");
  return !has_proper_factorization(n);
}

bool is_prime(const Number& n) {
  if (n.is_zero() || n.is_unit() || !n.contains_unit_digit()) return false;
  if (n.length() <= 2) return true;
  return !has_proper_factorization(n);
}

PrimeSieve::PrimeSieve(Base base, std::size_t k, std::uint64_t max_bits) : base_(base), k_(k) {
  if (k == 0) throw DomainError("prime length must be at least 1");
  const auto b = static_cast<std::uint64_t>(base.radix());
  try {
    first_ = detail::checked_pow(b, static_cast<unsigned>(k - 1));
    span_ = first_ * (b - 1);
    if (span_ / (b - 1) != first_) throw OverflowError("overflow");
  } catch (const OverflowError&) {
    throw BudgetExceeded("sieve of length " + std::to_string(k) + " overflows");
  }
  if (span_ > max_bits || k > 64) {
    throw BudgetExceeded("sieve of " + std::to_string(span_) + " numbers exceeds budget of " +
                         std::to_string(max_bits) + " bits");
  }
  composite_.assign((span_ + 63) / 64, 0);
  auto mark = [&](std::uint64_t value) {
    const std::uint64_t idx = value - first_;
    composite_[idx >> 6] |= std::uint64_t{1} << (idx & 63);
  };
  const Digit unit = base.unit_digit();

  if (b == 2) {
    // Bit masks are the values themselves; p * q is the OR of shifted copies.
    for (std::size_t r = 2; r <= (k + 1) / 2; ++r) {
      const std::size_t s = k + 1 - r;
      for (std::uint64_t p = std::uint64_t{1} << (r - 1); p < (std::uint64_t{1} << r); ++p) {
        const std::uint64_t q_begin = (r == s) ? p : std::uint64_t{1} << (s - 1);
        for (std::uint64_t q = q_begin; q < (std::uint64_t{1} << s); ++q) {
          std::uint64_t m = 0;
          for (std::uint64_t bits = q; bits != 0; bits &= bits - 1) m |= p << __builtin_ctzll(bits);
          mark(m);
        }
      }
    }
  } else {
    // Numbers of length r containing the unit digit, as packed digit arrays.
    std::vector<std::vector<Digit>> with_unit(k);
    for (std::size_t r = 2; r < k; ++r) {
      const std::uint64_t lo = detail::checked_pow(b, static_cast<unsigned>(r - 1));
      const std::uint64_t hi = lo * b;
      auto& list = with_unit[r];
      std::vector<Digit> d(r);
      for (std::uint64_t v = lo; v < hi; ++v) {
        std::uint64_t x = v;
        bool has = false;
        for (std::size_t i = 0; i < r; ++i) {
          d[i] = static_cast<Digit>(x % b);
          x /= b;
          has = has || d[i] == unit;
        }
        if (has) list.insert(list.end(), d.begin(), d.end());
      }
    }
    std::vector<Digit> prod(k);
    for (std::size_t r = 2; r <= (k + 1) / 2; ++r) {
      const std::size_t s = k + 1 - r;
      const auto& ps = with_unit[r];
      const auto& qs = with_unit[s];
      const std::size_t np = ps.size() / r, nq = qs.size() / s;
      for (std::size_t i = 0; i < np; ++i) {
        const std::span<const Digit> p(&ps[i * r], r);
        for (std::size_t j = (r == s) ? i : 0; j < nq; ++j) {
          detail::mul_digits(p, std::span<const Digit>(&qs[j * s], s), prod);
          std::uint64_t m = 0;
          for (std::size_t c = k; c-- > 0;) m = m * b + prod[c];
          mark(m);
        }
      }
    }
  }

  for (std::uint64_t idx = 0; idx < span_; ++idx) {
    if (bit(idx)) continue;
    if (is_prime_value(first_ + idx)) ++count_;
  }
}

bool PrimeSieve::is_prime_value(std::uint64_t value) const {
  if (value < first_ || value - first_ >= span_) {
    throw DomainError(std::to_string(value) + " does not have " + std::to_string(k_) + " digits");
  }
  if (bit(value - first_)) return false;
  const auto b = static_cast<std::uint64_t>(base_.radix());
  if (k_ > 2 && value % b == 0) return false;
  const Digit unit = base_.unit_digit();
  if (k_ == 1) return false;
  for (std::uint64_t x = value; x != 0; x /= b) {
    if (x % b == unit) return true;
  }
  return false;
}

std::vector<Number> PrimeSieve::primes() const {
  std::vector<Number> out;
  out.reserve(count_);
  for (std::uint64_t idx = 0; idx < span_; ++idx) {
    if (!bit(idx) && is_prime_value(first_ + idx)) out.push_back(Number::from_value(first_ + idx, base_));
  }
  return out;
}

std::vector<Number> primes_of_length(Base base, std::size_t k) { return PrimeSieve(base, k).primes(); }

std::uint64_t prime_candidate_bound(Base base, std::size_t k) {
  if (k < 2) return 0;
  const auto b = static_cast<std::uint64_t>(base.radix());
  const auto e = static_cast<unsigned>(k - 2);
  return (b - 1) * (b - 1) * detail::checked_pow(b, e) - (b - 2) * detail::checked_pow(b - 1, e);
}

std::uint64_t prime_necessary_count(Base base, std::size_t k) {
  const auto b = static_cast<std::uint64_t>(base.radix());
  if (k < 2) return 0;
  if (k == 2) return 2 * (b - 1);
  const auto e = static_cast<unsigned>(k - 2);
  return (b - 1) * (b - 1) * detail::checked_pow(b, e) - (b - 2) * (b - 2) * detail::checked_pow(b - 1, e);
}

PrimeCount prime_count(Base base, std::size_t k) {
  return PrimeCount{k, PrimeSieve(base, k).count(), prime_candidate_bound(base, k), prime_necessary_count(base, k)};
}

Number Factorization::product(Base base) const {
  Number acc = unit(base);
  for (const Number& p : primes) acc = mul(acc, p);
  return mul(Number(base, {r}), acc);
}

std::vector<Factorization> factorizations(const Number& n) {
  if (n.is_zero()) throw DomainError("0 has no factorization into primes");
  const Base base = n.base();
  const bool has_unit = n.contains_unit_digit();
  const Digit r = has_unit ? base.unit_digit() : n.max_digit();
  const Number m = has_unit ? n : raise_max_digit(n);

  using Multiset = std::vector<Number>;
  std::map<Number, std::set<Multiset>> memo;
  std::map<Number, bool> prime_cache;
  auto prime = [&](const Number& x) {
    auto [it, fresh] = prime_cache.try_emplace(x, false);
    if (fresh) it->second = is_prime(x);
    return it->second;
  };

  auto rec = [&](auto&& self, const Number& x) -> const std::set<Multiset>& {
    if (auto it = memo.find(x); it != memo.end()) return it->second;
    std::set<Multiset> out;
    if (x.is_unit()) {
      out.insert(Multiset{});
    } else if (prime(x)) {
      out.insert(Multiset{x});
    } else {
      const auto divs = divisor_list(x).divisors;
      for (const Number& p : divs) {
        if (p == x || p.is_unit() || !prime(p)) continue;
        const std::size_t q_len = x.length() - p.length() + 1;
        for (const Number& q : divs) {
          if (q.length() != q_len || !q.contains_unit_digit() || mul(p, q) != x) continue;
          for (Multiset f : self(self, q)) {
            f.insert(std::upper_bound(f.begin(), f.end(), p), p);
            out.insert(std::move(f));
          }
        }
      }
    }
    return memo.emplace(x, std::move(out)).first->second;
  };

  std::vector<Factorization> result;
  for (const auto& f : rec(rec, m)) result.push_back(Factorization{r, f});
  return result;
}

bool prime_divisor_sum_test(const Number& n) {
  if (n.is_zero() || n.is_unit()) throw DomainError("prime divisor sum needs n other than 0 and the unit");
  Number sum(n.base());
  for (const Number& p : divisor_list(n).divisors) {
    if (is_prime(p)) sum = add(sum, p);
  }
  return sum == n;
}

std::vector<Template> templates(std::size_t k) {
  if (k < 2) throw DomainError("templates have at least two digits");
  if (k > 8) throw BudgetExceeded("template search beyond length 8 is not supported");
  TemplateFinder finder(k);
  std::vector<std::string> found;
  for (const auto& p : finder.canonical_patterns()) {
    if (finder.is_template(p)) found.push_back(p);
  }
  std::sort(found.begin(), found.end());
  std::vector<Template> out;
  for (const auto& p : found) {
    std::string rev(p.rbegin(), p.rend());
    rev = canonical_pattern(rev);
    const bool rev_is_template = std::binary_search(found.begin(), found.end(), rev);
    out.push_back(Template{pattern_number(p), !rev_is_template || p <= rev});
  }
  return out;
}

std::vector<Template> reduced_templates(std::size_t max_k) {
  std::vector<Template> out;
  for (std::size_t k = 2; k <= max_k; ++k) {
    for (auto& t : templates(k)) {
      if (t.reversal_canonical) out.push_back(std::move(t));
    }
  }
  return out;
}

std::vector<Number> promotions(const Number& t, Base base) {
  if (t.is_zero()) throw DomainError("cannot promote 0");
  std::vector<Number> out;
  promote(t, base, [&](const std::vector<Digit>& d) { out.emplace_back(base, d); });
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Number> promote_all(const std::vector<Template>& ts, Base base, bool require_unit_digit) {
  std::vector<std::uint64_t> values;
  const auto b = static_cast<std::uint64_t>(base.radix());
  const Digit unit = base.unit_digit();
  for (const auto& t : ts) {
    promote(t.digits, base, [&](const std::vector<Digit>& d) {
      if (require_unit_digit && std::find(d.begin(), d.end(), unit) == d.end()) return;
      std::uint64_t v = 0;
      for (std::size_t c = d.size(); c-- > 0;) v = v * b + d[c];
      values.push_back(v);
    });
  }
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  std::vector<Number> out;
  out.reserve(values.size());
  for (auto v : values) out.push_back(Number::from_value(v, base));
  return out;
}

}  // namespace dismal
