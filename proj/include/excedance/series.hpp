#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "excedance/rational.hpp"

namespace excedance {

/// Power series truncated at x^order, with exact rational coefficients.
///
/// coeffs()[k] is the ordinary coefficient of x^k. Binary operations on
/// series of different orders truncate to the smaller order, so precision is
/// never invented.
class Series {
public:
  /// Zero series of the given order.
  explicit Series(std::size_t order);
  /// Takes coefficients c0..cN; the order is coeffs.size() - 1. Throws
  /// std::invalid_argument for an empty list.
  explicit Series(std::vector<Rational> coeffs);

  static Series constant(const Rational &c, std::size_t order);

  std::size_t order() const { return coeffs_.size() - 1; }
  const std::vector<Rational> &coeffs() const { return coeffs_; }
  const Rational &operator[](std::size_t k) const { return coeffs_.at(k); }

  /// "c0 + c1*x + c2*x^2 + ..." with every coefficient in p/q form.
  std::string to_string() const;

  friend bool operator==(const Series &, const Series &) = default;

private:
  std::vector<Rational> coeffs_;
};

Series series_add(const Series &a, const Series &b);
Series series_sub(const Series &a, const Series &b);
Series series_scale(const Rational &c, const Series &a);
Series series_mul(const Series &a, const Series &b);

/// Inverse under multiplication. Throws std::domain_error when the constant
/// term is zero.
Series series_reciprocal(const Series &a);

/// e^{a x} truncated at order: coefficient k is a^k / k!.
Series exp_linear(const Rational &a, std::size_t order);

/// Phi(x, t) = (t - 1) / (t - e^{x(t-1)}). Throws std::domain_error for t = 1.
Series phi_series(const Rational &t, std::size_t order);

/// tanh x = (e^x - e^{-x}) / (e^x + e^{-x}).
Series tanh_series(std::size_t order);

/// 2x / (e^x + 1); EGF coefficients are the Genocchi numbers.
Series genocchi_series(std::size_t order);

/// x / (e^x - 1); EGF coefficients are the Bernoulli numbers with B1 = -1/2.
Series bernoulli_series(std::size_t order);

/// n! * [x^n] s. Throws std::out_of_range when n exceeds the order of s.
Rational egf_coeff(const Series &s, std::size_t n);

} // namespace excedance
