#pragma once

#include <compare>
#include <iosfwd>
#include <string>
#include <string_view>

#include "excedance/integer.hpp"

namespace excedance {

/// Exact fraction, always kept in lowest terms with a positive denominator.
///
/// Because every constructor and operator normalizes eagerly, two Rationals
/// are equal exactly when their numerators and denominators are equal.
class Rational {
public:
  Rational() : num_(0), den_(1) {}
  Rational(std::int64_t v) : num_(v), den_(1) {} // NOLINT(google-explicit-constructor)
  Rational(Integer v) : num_(std::move(v)), den_(1) {} // NOLINT(google-explicit-constructor)

  /// Throws std::domain_error when q is zero.
  Rational(Integer p, Integer q);

  /// Accepts "p" or "p/q" with optional sign on either part.
  static Rational parse(std::string_view text);

  const Integer &numerator() const { return num_; }
  const Integer &denominator() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_integer() const { return den_ == Integer(1); }
  int sign() const { return num_.sign(); }

  /// Numerator of an integral value; throws std::domain_error otherwise.
  Integer to_integer() const;

  /// "p" for integers, "p/q" otherwise.
  std::string to_string() const;

  Rational inverse() const; // throws std::domain_error on zero
  Rational pow(int exponent) const;

  Rational operator-() const;
  Rational &operator+=(const Rational &o);
  Rational &operator-=(const Rational &o);
  Rational &operator*=(const Rational &o);
  Rational &operator/=(const Rational &o);

  friend Rational operator+(Rational a, const Rational &b) { return a += b; }
  friend Rational operator-(Rational a, const Rational &b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational &b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational &b) { return a /= b; }

  friend bool operator==(const Rational &a, const Rational &b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Rational &a, const Rational &b) {
    return a.num_ * b.den_ <=> b.num_ * a.den_;
  }

private:
  struct Normalized {};
  Rational(Integer p, Integer q, Normalized) : num_(std::move(p)), den_(std::move(q)) {}

  Integer num_;
  Integer den_;
};

std::ostream &operator<<(std::ostream &os, const Rational &v);

} // namespace excedance
