#include "dismal/number.hpp"

#include <algorithm>
#include <charconv>
#include <limits>

namespace dismal {

namespace detail {

void mul_digits(std::span<const Digit> a, std::span<const Digit> b, std::span<Digit> out) noexcept {
  std::fill(out.begin(), out.end(), Digit{0});
  for (std::size_t i = 0; i < a.size(); ++i) {
    const Digit ai = a[i];
    if (ai == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      const Digit m = std::min(ai, b[j]);
      Digit& slot = out[i + j];
      if (m > slot) slot = m;
    }
  }
}

std::uint64_t checked_pow(std::uint64_t b, unsigned e) {
  std::uint64_t r = 1;
  for (unsigned i = 0; i < e; ++i) {
    if (b != 0 && r > std::numeric_limits<std::uint64_t>::max() / b) {
      throw OverflowError("power exceeds 64 bits");
    }
    r *= b;
  }
  return r;
}

char digit_char(Digit d) noexcept {
  return d < 10 ? static_cast<char>('0' + d) : static_cast<char>('a' + (d - 10));
}

void require_same_base(const Number& a, const Number& b) {
  if (a.base() != b.base()) {
    throw BaseMismatch("operands have bases " + std::to_string(a.base().radix()) + " and " +
                       std::to_string(b.base().radix()));
  }
}

}  // namespace detail

namespace {

int char_digit(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'z') return c - 'a' + 10;
  if (c >= 'A' && c <= 'Z') return c - 'A' + 10;
  return -1;
}

void strip(std::vector<Digit>& d) {
  while (!d.empty() && d.back() == 0) d.pop_back();
}

}  // namespace

Number::Number(Base base, std::vector<Digit> digits_lsf) : base_(base), digits_(std::move(digits_lsf)) {
  for (Digit d : digits_) {
    if (d >= base.radix()) {
      throw DomainError("digit " + std::to_string(d) + " out of range for base " +
                        std::to_string(base.radix()));
    }
  }
  strip(digits_);
}

Number Number::from_value(std::uint64_t value, Base base) {
  std::vector<Digit> d;
  const auto b = static_cast<std::uint64_t>(base.radix());
  while (value != 0) {
    d.push_back(static_cast<Digit>(value % b));
    value /= b;
  }
  return Number(base, std::move(d));
}

Number Number::from_msf(Base base, std::initializer_list<int> digits_msf) {
  std::vector<Digit> d;
  d.reserve(digits_msf.size());
  for (auto it = std::rbegin(digits_msf); it != std::rend(digits_msf); ++it) {
    if (*it < 0 || *it >= base.radix()) throw DomainError("digit out of range");
    d.push_back(static_cast<Digit>(*it));
  }
  return Number(base, std::move(d));
}

Digit Number::max_digit() const noexcept {
  return digits_.empty() ? Digit{0} : *std::max_element(digits_.begin(), digits_.end());
}

bool Number::contains_unit_digit() const noexcept {
  return std::find(digits_.begin(), digits_.end(), base_.unit_digit()) != digits_.end();
}

bool Number::fits_u64() const noexcept {
  try {
    (void)value();
    return true;
  } catch (const OverflowError&) {
    return false;
  }
}

std::uint64_t Number::value() const {
  const auto b = static_cast<std::uint64_t>(base_.radix());
  constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t v = 0;
  for (auto it = digits_.rbegin(); it != digits_.rend(); ++it) {
    if (v > (kMax - *it) / b) {
      throw OverflowError(to_string() + " does not fit in 64 bits");
    }
    v = v * b + *it;
  }
  return v;
}

std::string Number::digit_string() const {
  if (digits_.empty()) return "0";
  std::string s;
  s.reserve(digits_.size());
  for (auto it = digits_.rbegin(); it != digits_.rend(); ++it) s.push_back(detail::digit_char(*it));
  return s;
}

std::string Number::to_string() const {
  if (base_ == kDecimal) return digit_string();
  return digit_string() + "@" + std::to_string(base_.radix());
}

std::strong_ordering operator<=>(const Number& a, const Number& b) {
  if (auto c = a.base_ <=> b.base_; c != 0) return c;
  if (auto c = a.digits_.size() <=> b.digits_.size(); c != 0) return c;
  return std::lexicographical_compare_three_way(a.digits_.rbegin(), a.digits_.rend(), b.digits_.rbegin(),
                                                b.digits_.rend());
}

DigitMap::DigitMap(Base base, std::vector<Digit> image) : base_(base), image_(std::move(image)) {
  if (image_.size() != static_cast<std::size_t>(base.radix())) {
    throw DomainError("digit map needs exactly one image per digit");
  }
  for (std::size_t i = 0; i < image_.size(); ++i) {
    if (image_[i] >= base.radix()) throw DomainError("digit map image out of range");
    if (i > 0 && image_[i] < image_[i - 1]) throw DomainError("digit map must be nondecreasing");
  }
}

DigitMap DigitMap::identity(Base base) {
  std::vector<Digit> image(static_cast<std::size_t>(base.radix()));
  for (std::size_t i = 0; i < image.size(); ++i) image[i] = static_cast<Digit>(i);
  return DigitMap(base, std::move(image));
}

Number parse_digits(std::string_view digits, Base base) {
  if (digits.empty()) throw ParseError("empty digit string");
  std::vector<Digit> d(digits.size());
  for (std::size_t i = 0; i < digits.size(); ++i) {
    const int v = char_digit(digits[digits.size() - 1 - i]);
    if (v < 0) throw ParseError("invalid digit '" + std::string(1, digits[digits.size() - 1 - i]) + "'");
    if (v >= base.radix()) {
      throw ParseError("digit '" + std::string(1, digits[digits.size() - 1 - i]) + "' not valid in base " +
                       std::to_string(base.radix()));
    }
    d[i] = static_cast<Digit>(v);
  }
  return Number(base, std::move(d));
}

Number parse(std::string_view text, Base default_base) {
  const auto at = text.find('@');
  if (at == std::string_view::npos) return parse_digits(text, default_base);
  const auto suffix = text.substr(at + 1);
  int radix = 0;
  const auto [ptr, ec] = std::from_chars(suffix.data(), suffix.data() + suffix.size(), radix);
  if (suffix.empty() || ec != std::errc{} || ptr != suffix.data() + suffix.size()) {
    throw ParseError("invalid base suffix in '" + std::string(text) + "'");
  }
  if (radix < Base::kMin || radix > Base::kMax) {
    throw ParseError("base " + std::to_string(radix) + " out of range [2, 36]");
  }
  return parse_digits(text.substr(0, at), Base{radix});
}

Number add(const Number& a, const Number& b) {
  detail::require_same_base(a, b);
  const auto da = a.digits();
  const auto db = b.digits();
  std::vector<Digit> out(std::max(da.size(), db.size()));
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = std::max(a.digit(i), b.digit(i));
  return Number(a.base(), std::move(out));
}

Number mul(const Number& a, const Number& b) {
  detail::require_same_base(a, b);
  if (a.is_zero() || b.is_zero()) return Number(a.base());
  std::vector<Digit> out(a.length() + b.length() - 1);
  detail::mul_digits(a.digits(), b.digits(), out);
  return Number(a.base(), std::move(out));
}

Number apply(const DigitMap& g, const Number& n) {
  if (g.base() != n.base()) throw BaseMismatch("digit map and number have different bases");
  std::vector<Digit> out(n.digits().begin(), n.digits().end());
  for (Digit& d : out) d = g(d);
  return Number(n.base(), std::move(out));
}

bool dominates(const Number& a, const Number& b) {
  detail::require_same_base(a, b);
  if (a.length() > b.length()) return false;
  for (std::size_t i = 0; i < a.length(); ++i) {
    if (a.digit(i) > b.digit(i)) return false;
  }
  return true;
}

Number reverse(const Number& n) {
  std::vector<Digit> d(n.digits().rbegin(), n.digits().rend());
  return Number(n.base(), std::move(d));
}

Number rebase(const Number& n, Base target) {
  if (n.max_digit() >= target.radix()) {
    throw DomainError("digit " + std::to_string(n.max_digit()) + " is not valid in base " +
                      std::to_string(target.radix()));
  }
  return Number(target, std::vector<Digit>(n.digits().begin(), n.digits().end()));
}

Number unit(Base base) { return Number(base, {base.unit_digit()}); }

Number repunit(Base base, std::size_t k) { return Number(base, std::vector<Digit>(k, Digit{1})); }

Number all_units(Base base, std::size_t k) { return Number(base, std::vector<Digit>(k, base.unit_digit())); }

Number raise_max_digit(const Number& n) {
  const Digit r = n.max_digit();
  std::vector<Digit> d(n.digits().begin(), n.digits().end());
  for (Digit& x : d) {
    if (x == r) x = n.base().unit_digit();
  }
  return Number(n.base(), std::move(d));
}

}  // namespace dismal

std::size_t std::hash<dismal::Number>::operator()(const dismal::Number& n) const noexcept {
  std::size_t h = static_cast<std::size_t>(n.base().radix());
  for (dismal::Digit d : n.digits()) h = h * 1000003u ^ d;
  return h;
}
