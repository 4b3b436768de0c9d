#include "excedance/integer.hpp"

#include <ostream>
#include <stdexcept>

namespace excedance {

static_assert(sizeof(long) == sizeof(std::int64_t), "LP64 platform expected");

Integer::Integer(std::int64_t v) : value_(static_cast<long>(v)) {}

Integer Integer::parse(std::string_view text) {
  std::string_view digits = text;
  if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) {
    digits.remove_prefix(1);
  }
  if (digits.empty()) {
    throw std::invalid_argument("not an integer: '" + std::string(text) + "'");
  }
  for (char c : digits) {
    if (c < '0' || c > '9') {
      throw std::invalid_argument("not an integer: '" + std::string(text) + "'");
    }
  }
  std::string normalized(digits);
  mpz_class v(normalized, 10);
  if (text.front() == '-') {
    v = -v;
  }
  return Integer(std::move(v));
}

bool Integer::fits_int64() const {
  return value_.fits_slong_p();
}

std::int64_t Integer::to_int64() const {
  if (!fits_int64()) {
    throw std::overflow_error("integer does not fit in 64 bits: " + to_string());
  }
  return static_cast<std::int64_t>(value_.get_si());
}

Integer Integer::mod(const Integer &m) const {
  if (m.sign() <= 0) {
    throw std::domain_error("modulus must be positive");
  }
  mpz_class r;
  mpz_fdiv_r(r.get_mpz_t(), value_.get_mpz_t(), m.value_.get_mpz_t());
  return Integer(std::move(r));
}

Integer Integer::pow(unsigned long exponent) const {
  mpz_class r;
  mpz_pow_ui(r.get_mpz_t(), value_.get_mpz_t(), exponent);
  return Integer(std::move(r));
}

Integer quotient(const Integer &a, const Integer &b) {
  if (b.is_zero()) {
    throw std::domain_error("integer division by zero");
  }
  mpz_class q;
  mpz_tdiv_q(q.get_mpz_t(), a.value_.get_mpz_t(), b.value_.get_mpz_t());
  return Integer(std::move(q));
}

Integer gcd(const Integer &a, const Integer &b) {
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), a.value_.get_mpz_t(), b.value_.get_mpz_t());
  return Integer(std::move(g));
}

std::ostream &operator<<(std::ostream &os, const Integer &v) {
  return os << v.to_string();
}

} // namespace excedance
