#pragma once

#include <cstddef>
#include <functional>
#include <mutex>
#include <string>
#include <string_view>
#include <vector>

#include "excedance/integer.hpp"
#include "excedance/permutation.hpp"
#include "excedance/rational.hpp"

namespace excedance {

/// Which computation produced a sequence value.
enum class Route { recurrence, series, bernoulli, counting, closed_form, brute_force };

std::string_view route_name(Route r);

/// Memoized prefix of a sequence, grown on demand and never evicted.
///
/// Safe for concurrent readers: growth happens under a lock and each value is
/// computed once. Returned values are copies of immutable entries.
class SequenceTable {
public:
  /// Extends `values` (which holds indices first_index .. first_index +
  /// values.size() - 1) until it has at least `count` entries.
  using Extender = std::function<void(std::vector<Rational> &values, std::size_t count)>;

  SequenceTable(std::string name, Route route, std::size_t first_index, Extender extend);

  const std::string &name() const { return name_; }
  Route route() const { return route_; }
  std::size_t first_index() const { return first_; }

  /// Throws std::out_of_range for index < first_index().
  Rational at(std::size_t index) const;
  std::size_t cached() const;

private:
  std::string name_;
  Route route_;
  std::size_t first_;
  Extender extend_;
  mutable std::mutex mutex_;
  mutable std::vector<Rational> values_;
};

/// Row n of the excedance triangle, computed by the Eulerian recurrence
/// E(n,k) = (k+1) E(n-1,k) + (n-k) E(n-1,k-1). Empty for n = 0.
std::vector<Integer> eulerian_numbers(std::size_t n);

/// A_n(t) from the Eulerian row. Standard is sum E(n,k) t^k (1 for n = 0);
/// shifted multiplies by t for n >= 1 and is 1 for n = 0.
Rational eulerian_poly_at(std::size_t n, const Rational &t, Convention convention);

/// B_n with B1 = -1/2, from sum_{j<=n} C(n+1,j) B_j = 0.
Rational bernoulli(std::size_t n);

enum class TangentRoute { bernoulli, series, counting };

/// Largest odd length the counting route will enumerate.
inline constexpr std::size_t kTangentCountingGuard = 11;

/// Tangent number T_m for odd m.
///
/// - bernoulli: (-1)^(k-1) 2^(2k) (2^(2k) - 1) B_(2k) / (2k) with m = 2k - 1,
///   in exact rationals.
/// - series: (-1)^(k-1) m! [x^m] tanh x.
/// - counting: number of up-down permutations of length m (m <= 11).
///
/// Throws std::invalid_argument for even m, GuardError for the counting route
/// past its guard, std::logic_error if a rational route fails to produce an
/// integer.
Integer tangent(std::size_t m, TangentRoute route = TangentRoute::bernoulli);

/// The exact value a rational route yields for T_m before the integrality
/// check. Only the bernoulli and series routes are accepted.
Rational tangent_rational(std::size_t m, TangentRoute route);

/// G_n = n! [x^n] 2x/(e^x + 1), n >= 1.
Integer genocchi(std::size_t n);
Rational genocchi_rational(std::size_t n);

/// S_n from the closed form: S_0 = 1, S_(2k) = 0, S_(2k-1) = (-1)^(k-1) T_(2k-1).
Integer alternating_sum(std::size_t n);

} // namespace excedance
