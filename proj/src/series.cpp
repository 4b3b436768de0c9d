#include "excedance/series.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "excedance/combinatorics.hpp"

namespace excedance {

Series::Series(std::size_t order) : coeffs_(order + 1) {}

Series::Series(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) {
    throw std::invalid_argument("series needs at least a constant term");
  }
}

Series Series::constant(const Rational &c, std::size_t order) {
  Series s(order);
  s.coeffs_[0] = c;
  return s;
}

std::string Series::to_string() const {
  std::ostringstream os;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (k > 0) {
      os << " + ";
    }
    os << coeffs_[k];
    if (k == 1) {
      os << "*x";
    } else if (k > 1) {
      os << "*x^" << k;
    }
  }
  return os.str();
}

Series series_add(const Series &a, const Series &b) {
  std::size_t n = std::min(a.order(), b.order());
  std::vector<Rational> c(n + 1);
  for (std::size_t k = 0; k <= n; ++k) {
    c[k] = a[k] + b[k];
  }
  return Series(std::move(c));
}

Series series_sub(const Series &a, const Series &b) {
  return series_add(a, series_scale(Rational(-1), b));
}

Series series_scale(const Rational &c, const Series &a) {
  std::vector<Rational> out(a.coeffs());
  for (auto &v : out) {
    v *= c;
  }
  return Series(std::move(out));
}

Series series_mul(const Series &a, const Series &b) {
  std::size_t n = std::min(a.order(), b.order());
  std::vector<Rational> c(n + 1);
  for (std::size_t k = 0; k <= n; ++k) {
    Rational acc;
    for (std::size_t j = 0; j <= k; ++j) {
      if (a[j].is_zero() || b[k - j].is_zero()) {
        continue;
      }
      acc += a[j] * b[k - j];
    }
    c[k] = std::move(acc);
  }
  return Series(std::move(c));
}

Series series_reciprocal(const Series &a) {
  if (a[0].is_zero()) {
    throw std::domain_error("series with zero constant term has no reciprocal");
  }
  const std::size_t n = a.order();
  const Rational inv0 = a[0].inverse();
  std::vector<Rational> b(n + 1);
  b[0] = inv0;
  for (std::size_t k = 1; k <= n; ++k) {
    Rational acc;
    for (std::size_t j = 1; j <= k; ++j) {
      if (a[j].is_zero() || b[k - j].is_zero()) {
        continue;
      }
      acc += a[j] * b[k - j];
    }
    b[k] = -(inv0 * acc);
  }
  return Series(std::move(b));
}

Series exp_linear(const Rational &a, std::size_t order) {
  std::vector<Rational> c(order + 1);
  c[0] = Rational(1);
  for (std::size_t k = 1; k <= order; ++k) {
    c[k] = c[k - 1] * a / Rational(static_cast<std::int64_t>(k));
  }
  return Series(std::move(c));
}

Series phi_series(const Rational &t, std::size_t order) {
  const Rational shift = t - Rational(1);
  if (shift.is_zero()) {
    throw std::domain_error("Phi(x, t) is undefined at t = 1: the denominator t - e^{x(t-1)} vanishes");
  }
  Series denom = series_sub(Series::constant(t, order), exp_linear(shift, order));
  return series_scale(shift, series_reciprocal(denom));
}

Series tanh_series(std::size_t order) {
  Series ep = exp_linear(Rational(1), order);
  Series em = exp_linear(Rational(-1), order);
  return series_mul(series_sub(ep, em), series_reciprocal(series_add(ep, em)));
}

Series genocchi_series(std::size_t order) {
  std::vector<Rational> c(order + 1);
  if (order >= 1) {
    c[1] = Rational(2);
  }
  Series denom = series_add(exp_linear(Rational(1), order), Series::constant(Rational(1), order));
  return series_mul(Series(std::move(c)), series_reciprocal(denom));
}

Series bernoulli_series(std::size_t order) {
  // (e^x - 1) / x has coefficients 1/(k+1)! and a nonzero constant term.
  std::vector<Rational> q(order + 1);
  for (std::size_t k = 0; k <= order; ++k) {
    q[k] = Rational(Integer(1), factorial(static_cast<std::uint32_t>(k + 1)));
  }
  return series_reciprocal(Series(std::move(q)));
}

Rational egf_coeff(const Series &s, std::size_t n) {
  if (n > s.order()) {
    throw std::out_of_range("index " + std::to_string(n) + " beyond truncation order " +
                            std::to_string(s.order()));
  }
  return s[n] * Rational(factorial(static_cast<std::uint32_t>(n)));
}

} // namespace excedance
