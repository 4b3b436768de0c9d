#include "excedance/rational.hpp"

#include <ostream>
#include <stdexcept>

namespace excedance {

namespace {

void normalize(Integer &num, Integer &den) {
  if (den.sign() < 0) {
    num = -num;
    den = -den;
  }
  if (num.is_zero()) {
    den = Integer(1);
    return;
  }
  Integer g = gcd(num, den);
  if (g != Integer(1)) {
    num = quotient(num, g);
    den = quotient(den, g);
  }
}

} // namespace

Rational::Rational(Integer p, Integer q) : num_(std::move(p)), den_(std::move(q)) {
  if (den_.is_zero()) {
    throw std::domain_error("rational with zero denominator");
  }
  normalize(num_, den_);
}

Rational Rational::parse(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    return Rational(Integer::parse(text));
  }
  return Rational(Integer::parse(text.substr(0, slash)), Integer::parse(text.substr(slash + 1)));
}

Integer Rational::to_integer() const {
  if (!is_integer()) {
    throw std::domain_error("not an integer: " + to_string());
  }
  return num_;
}

std::string Rational::to_string() const {
  if (is_integer()) {
    return num_.to_string();
  }
  return num_.to_string() + "/" + den_.to_string();
}

Rational Rational::inverse() const {
  if (is_zero()) {
    throw std::domain_error("inverse of zero");
  }
  if (num_.sign() < 0) {
    return Rational(-den_, -num_, Normalized{});
  }
  return Rational(den_, num_, Normalized{});
}

Rational Rational::pow(int exponent) const {
  if (exponent < 0) {
    return inverse().pow(-exponent);
  }
  // gcd(p, q) = 1 implies gcd(p^k, q^k) = 1.
  auto e = static_cast<unsigned long>(exponent);
  return Rational(num_.pow(e), den_.pow(e), Normalized{});
}

Rational Rational::operator-() const { return Rational(-num_, den_, Normalized{}); }

Rational &Rational::operator+=(const Rational &o) {
  if (den_ == o.den_) {
    num_ += o.num_;
  } else {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ *= o.den_;
  }
  normalize(num_, den_);
  return *this;
}

Rational &Rational::operator-=(const Rational &o) { return *this += -o; }

Rational &Rational::operator*=(const Rational &o) {
  num_ *= o.num_;
  den_ *= o.den_;
  normalize(num_, den_);
  return *this;
}

Rational &Rational::operator/=(const Rational &o) { return *this *= o.inverse(); }

std::ostream &operator<<(std::ostream &os, const Rational &v) {
  return os << v.to_string();
}

} // namespace excedance
