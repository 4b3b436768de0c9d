#include "excedance/sequences.hpp"

#include <stdexcept>

#include "excedance/combinatorics.hpp"
#include "excedance/series.hpp"

namespace excedance {

std::string_view route_name(Route r) {
  switch (r) {
  case Route::recurrence:
    return "recurrence";
  case Route::series:
    return "series";
  case Route::bernoulli:
    return "bernoulli";
  case Route::counting:
    return "counting";
  case Route::closed_form:
    return "closed-form";
  case Route::brute_force:
    return "brute-force";
  }
  return "unknown";
}

SequenceTable::SequenceTable(std::string name, Route route, std::size_t first_index, Extender extend)
    : name_(std::move(name)), route_(route), first_(first_index), extend_(std::move(extend)) {}

Rational SequenceTable::at(std::size_t index) const {
  if (index < first_) {
    throw std::out_of_range(name_ + " is defined from index " + std::to_string(first_));
  }
  const std::size_t offset = index - first_;
  std::lock_guard lock(mutex_);
  if (offset >= values_.size()) {
    std::size_t want = std::max(offset + 1, 2 * values_.size());
    extend_(values_, want);
  }
  return values_.at(offset);
}

std::size_t SequenceTable::cached() const {
  std::lock_guard lock(mutex_);
  return values_.size();
}

namespace {

const SequenceTable &bernoulli_table() {
  static const SequenceTable table(
      "bernoulli", Route::recurrence, 0, [](std::vector<Rational> &b, std::size_t count) {
        if (b.empty()) {
          b.emplace_back(1);
        }
        for (std::size_t n = b.size(); n < count; ++n) {
          Rational acc;
          for (std::size_t j = 0; j < n; ++j) {
            if (!b[j].is_zero()) {
              acc += Rational(binomial(static_cast<std::uint32_t>(n + 1), static_cast<std::int64_t>(j))) * b[j];
            }
          }
          b.push_back(-acc / Rational(static_cast<std::int64_t>(n + 1)));
        }
      });
  return table;
}

const SequenceTable &genocchi_table() {
  static const SequenceTable table(
      "genocchi", Route::series, 1, [](std::vector<Rational> &g, std::size_t count) {
        Series s = genocchi_series(count);
        for (std::size_t n = g.size() + 1; n <= count; ++n) {
          g.push_back(egf_coeff(s, n));
        }
      });
  return table;
}

Integer require_integer(const Rational &v, const char *what) {
  if (!v.is_integer()) {
    throw std::logic_error(std::string(what) + " produced a non-integer value " + v.to_string());
  }
  return v.numerator();
}

// (-1)^(k-1) for m = 2k - 1.
int tangent_sign(std::size_t m) { return ((m + 1) / 2) % 2 == 1 ? 1 : -1; }

} // namespace

std::vector<Integer> eulerian_numbers(std::size_t n) {
  if (n == 0) {
    return {};
  }
  std::vector<Integer> row{Integer(1)};
  for (std::size_t len = 2; len <= n; ++len) {
    std::vector<Integer> next(len);
    for (std::size_t k = 0; k < len; ++k) {
      Integer v;
      if (k < row.size()) {
        v += Integer(static_cast<std::int64_t>(k + 1)) * row[k];
      }
      if (k >= 1) {
        v += Integer(static_cast<std::int64_t>(len - k)) * row[k - 1];
      }
      next[k] = std::move(v);
    }
    row = std::move(next);
  }
  return row;
}

Rational eulerian_poly_at(std::size_t n, const Rational &t, Convention convention) {
  if (n == 0) {
    return Rational(1);
  }
  Rational sum;
  Rational power(1);
  for (const auto &e : eulerian_numbers(n)) {
    sum += Rational(e) * power;
    power *= t;
  }
  return convention == Convention::shifted ? sum * t : sum;
}

Rational bernoulli(std::size_t n) { return bernoulli_table().at(n); }

Rational tangent_rational(std::size_t m, TangentRoute route) {
  if (m % 2 == 0) {
    throw std::invalid_argument("tangent numbers are indexed by odd lengths, got " + std::to_string(m));
  }
  const Rational sign(tangent_sign(m));
  switch (route) {
  case TangentRoute::bernoulli: {
    const std::size_t two_k = m + 1;
    const Integer pow2 = Integer(2).pow(two_k);
    return sign * Rational(pow2 * (pow2 - Integer(1))) / Rational(static_cast<std::int64_t>(two_k)) *
           bernoulli(two_k);
  }
  case TangentRoute::series:
    return sign * egf_coeff(tanh_series(m), m);
  case TangentRoute::counting:
    break;
  }
  throw std::invalid_argument("tangent_rational takes the bernoulli or series route");
}

Integer tangent(std::size_t m, TangentRoute route) {
  if (m % 2 == 0) {
    throw std::invalid_argument("tangent numbers are indexed by odd lengths, got " + std::to_string(m));
  }
  switch (route) {
  case TangentRoute::bernoulli:
    return require_integer(tangent_rational(m, route), "Bernoulli route for the tangent numbers");
  case TangentRoute::series:
    return require_integer(tangent_rational(m, route), "tanh route for the tangent numbers");
  case TangentRoute::counting:
    if (m > kTangentCountingGuard) {
      throw GuardError("counting route for T_" + std::to_string(m) + " exceeds the guard of " +
                       std::to_string(kTangentCountingGuard));
    }
    return count_alternating(m);
  }
  throw std::invalid_argument("unknown tangent route");
}

Rational genocchi_rational(std::size_t n) {
  if (n == 0) {
    throw std::invalid_argument("Genocchi numbers are indexed from 1");
  }
  return genocchi_table().at(n);
}

Integer genocchi(std::size_t n) { return require_integer(genocchi_rational(n), "Genocchi series"); }

Integer alternating_sum(std::size_t n) {
  if (n == 0) {
    return Integer(1);
  }
  if (n % 2 == 0) {
    return Integer(0);
  }
  Integer t = tangent(n, TangentRoute::bernoulli);
  return tangent_sign(n) > 0 ? t : -t;
}

} // namespace excedance
