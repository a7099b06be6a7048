#pragma once

// Exact arbitrary-precision integers and rationals.
//
// BigInt is GMP's mpz_class. BigRational wraps mpq_class and keeps it in
// canonical form at all times: denominator > 0, gcd(|num|, den) = 1, and
// zero stored as 0/1.

#include <compare>
#include <concepts>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace wbcc {

using BigInt = mpz_class;

/// Parses a decimal integer with optional leading '-' or '+'.
/// Throws std::invalid_argument on malformed input.
BigInt parse_integer(std::string_view text);

std::string to_string(const BigInt& value);

class BigRational {
 public:
  BigRational() = default;

  template <std::integral I>
  BigRational(I value) {  // NOLINT(google-explicit-constructor)
    if constexpr (std::is_signed_v<I>) {
      value_ = static_cast<long>(value);
    } else {
      value_ = static_cast<unsigned long>(value);
    }
  }

  BigRational(const BigInt& value) : value_(value) {}  // NOLINT

  /// Throws std::invalid_argument if `den` is zero.
  BigRational(const BigInt& num, const BigInt& den);

  /// Accepts "a" or "a/b" with decimal integers a, b (b nonzero).
  static BigRational parse(std::string_view text);

  const BigInt& numerator() const { return value_.get_num(); }
  const BigInt& denominator() const { return value_.get_den(); }

  bool is_zero() const { return sgn(value_) == 0; }
  bool is_one() const { return value_ == 1; }
  bool is_integer() const { return value_.get_den() == 1; }
  int sign() const { return sgn(value_); }

  /// Checked narrowing. Throws std::domain_error when the value is not an
  /// integer.
  BigInt to_integer() const;

  std::string to_string() const;

  BigRational& operator+=(const BigRational& o) {
    value_ += o.value_;
    return *this;
  }
  BigRational& operator-=(const BigRational& o) {
    value_ -= o.value_;
    return *this;
  }
  BigRational& operator*=(const BigRational& o) {
    value_ *= o.value_;
    return *this;
  }
  /// Throws std::domain_error on division by zero.
  BigRational& operator/=(const BigRational& o);

  friend BigRational operator+(BigRational a, const BigRational& b) { return a += b; }
  friend BigRational operator-(BigRational a, const BigRational& b) { return a -= b; }
  friend BigRational operator*(BigRational a, const BigRational& b) { return a *= b; }
  friend BigRational operator/(BigRational a, const BigRational& b) { return a /= b; }
  friend BigRational operator-(const BigRational& a) {
    BigRational r;
    r.value_ = -a.value_;
    return r;
  }

  friend bool operator==(const BigRational& a, const BigRational& b) {
    return cmp(a.value_, b.value_) == 0;
  }
  friend std::strong_ordering operator<=>(const BigRational& a, const BigRational& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const BigRational& q);

 private:
  mpq_class value_{0};
};

/// n! as an exact integer.
BigInt factorial(unsigned long n);

}  // namespace wbcc
