#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace excedance {

/// Arbitrary-precision signed integer.
///
/// Thin value wrapper over a GMP integer. Zero has a single representation,
/// so sign() and comparisons against zero are always consistent.
class Integer {
public:
  Integer() = default;
  Integer(std::int64_t v); // NOLINT(google-explicit-constructor)
  explicit Integer(mpz_class v) : value_(std::move(v)) {}

  /// Parses an optionally signed decimal string. Throws std::invalid_argument
  /// on anything else (empty input, stray characters, embedded spaces).
  static Integer parse(std::string_view text);

  std::string to_string() const { return value_.get_str(10); }

  int sign() const { return sgn(value_); }
  bool is_zero() const { return sign() == 0; }
  bool is_even() const { return mpz_even_p(value_.get_mpz_t()) != 0; }
  bool fits_int64() const;
  std::int64_t to_int64() const; // throws std::overflow_error

  Integer abs() const { return Integer(mpz_class(::abs(value_))); }

  /// Least nonnegative residue modulo m (m > 0), so -2 mod 4 == 2.
  Integer mod(const Integer &m) const;

  Integer pow(unsigned long exponent) const;

  const mpz_class &raw() const { return value_; }

  Integer operator-() const { return Integer(mpz_class(-value_)); }
  Integer &operator+=(const Integer &o) { value_ += o.value_; return *this; }
  Integer &operator-=(const Integer &o) { value_ -= o.value_; return *this; }
  Integer &operator*=(const Integer &o) { value_ *= o.value_; return *this; }

  friend Integer operator+(Integer a, const Integer &b) { return a += b; }
  friend Integer operator-(Integer a, const Integer &b) { return a -= b; }
  friend Integer operator*(Integer a, const Integer &b) { return a *= b; }

  /// Truncating quotient; throws std::domain_error on division by zero.
  friend Integer quotient(const Integer &a, const Integer &b);
  friend Integer gcd(const Integer &a, const Integer &b);

  friend bool operator==(const Integer &a, const Integer &b) {
    return cmp(a.value_, b.value_) == 0;
  }
  friend std::strong_ordering operator<=>(const Integer &a, const Integer &b) {
    return cmp(a.value_, b.value_) <=> 0;
  }

private:
  mpz_class value_;
};

std::ostream &operator<<(std::ostream &os, const Integer &v);

} // namespace excedance
