#pragma once

// Base-b dismal numbers: digitwise max for addition, max-min convolution for
// multiplication, no carries.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "dismal/error.hpp"

namespace dismal {

using Digit = std::uint8_t;

/// Radix of a dismal number, 2..36. The largest digit (radix - 1) is the
/// multiplicative unit.
class Base {
 public:
  static constexpr int kMin = 2;
  static constexpr int kMax = 36;

  constexpr explicit Base(int radix) : radix_(radix) {
    if (radix < kMin || radix > kMax) {
      throw DomainError("base must be in [2, 36], got " + std::to_string(radix));
    }
  }

  constexpr int radix() const noexcept { return radix_; }
  constexpr Digit unit_digit() const noexcept { return static_cast<Digit>(radix_ - 1); }

  constexpr auto operator<=>(const Base&) const = default;

 private:
  int radix_;
};

inline constexpr Base kDecimal{10};
inline constexpr Base kBinary{2};

/// A canonical base-b digit vector, least significant digit first, with no
/// most-significant zeros. Zero is the empty vector.
class Number {
 public:
  /// Zero in base 10.
  Number() : base_(kDecimal) {}
  /// Zero in the given base.
  explicit Number(Base base) : base_(base) {}
  /// Digits least significant first; trailing (most significant) zeros are
  /// stripped. Throws DomainError if any digit is >= base.
  Number(Base base, std::vector<Digit> digits_lsf);

  /// The base-b number whose ordinary integer value is `value`.
  static Number from_value(std::uint64_t value, Base base);
  /// Digits written most significant first, e.g. {1,6,9} for 169.
  static Number from_msf(Base base, std::initializer_list<int> digits_msf);

  Base base() const noexcept { return base_; }
  std::span<const Digit> digits() const noexcept { return digits_; }
  std::size_t length() const noexcept { return digits_.size(); }
  bool is_zero() const noexcept { return digits_.empty(); }
  /// Digit at position i, or 0 past the end.
  Digit digit(std::size_t i) const noexcept { return i < digits_.size() ? digits_[i] : Digit{0}; }
  Digit leading_digit() const noexcept { return digits_.empty() ? Digit{0} : digits_.back(); }
  Digit max_digit() const noexcept;
  bool contains_unit_digit() const noexcept;
  bool is_unit() const noexcept { return digits_.size() == 1 && digits_[0] == base_.unit_digit(); }

  /// Ordinary integer value. Throws OverflowError past 64 bits.
  std::uint64_t value() const;
  bool fits_u64() const noexcept;

  /// Digits most significant first using 0-9a-z.
  std::string digit_string() const;
  /// "<digits>@<base>", with the suffix omitted in base 10. Zero prints as "0".
  std::string to_string() const;

  friend bool operator==(const Number&, const Number&) = default;
  /// Numeric order within one base; numbers of different bases order by base.
  friend std::strong_ordering operator<=>(const Number& a, const Number& b);

 private:
  Base base_;
  std::vector<Digit> digits_;
};

/// Nondecreasing self-map of the digit alphabet {0, ..., b-1}.
class DigitMap {
 public:
  /// Throws DomainError unless `image` has exactly b entries, each < b, in
  /// nondecreasing order.
  DigitMap(Base base, std::vector<Digit> image);

  static DigitMap identity(Base base);

  Base base() const noexcept { return base_; }
  Digit operator()(Digit d) const { return image_.at(d); }
  std::span<const Digit> image() const noexcept { return image_; }

 private:
  Base base_;
  std::vector<Digit> image_;
};

/// Parses "169", "1101@2" or "z@36". Bare digit strings use `default_base`.
Number parse(std::string_view text, Base default_base = kDecimal);
/// Parses a bare digit string (no "@") in the given base.
Number parse_digits(std::string_view digits, Base base);

Number add(const Number& a, const Number& b);
Number mul(const Number& a, const Number& b);
inline Number operator+(const Number& a, const Number& b) { return add(a, b); }
inline Number operator*(const Number& a, const Number& b) { return mul(a, b); }

Number apply(const DigitMap& g, const Number& n);

/// a << b: every digit of a is <= the corresponding digit of b.
bool dominates(const Number& a, const Number& b);

Number reverse(const Number& n);
/// Same digit vector read in another base. Throws DomainError if some digit
/// is not a digit of `target`.
Number rebase(const Number& n, Base target);

/// The single digit b-1.
Number unit(Base base);
/// k ones.
Number repunit(Base base, std::size_t k);
/// k copies of the digit b-1, the largest k-digit number.
Number all_units(Base base, std::size_t k);
/// Every occurrence of the largest digit replaced by b-1.
Number raise_max_digit(const Number& n);

namespace detail {

/// out[c] = max over i+j=c of min(a[i], b[j]); out must hold a.size()+b.size()-1
/// digits. No canonicalization.
void mul_digits(std::span<const Digit> a, std::span<const Digit> b, std::span<Digit> out) noexcept;

/// b^e, throwing OverflowError past 64 bits.
std::uint64_t checked_pow(std::uint64_t b, unsigned e);

char digit_char(Digit d) noexcept;

void require_same_base(const Number& a, const Number& b);

}  // namespace detail

}  // namespace dismal

template <>
struct std::hash<dismal::Number> {
  std::size_t operator()(const dismal::Number& n) const noexcept;
};
