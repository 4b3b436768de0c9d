#pragma once

#include <cstddef>
#include <cstdint>
#include <iterator>
#include <optional>
#include <span>
#include <vector>

#include "excedance/errors.hpp"
#include "excedance/integer.hpp"
#include "excedance/rational.hpp"

namespace excedance {

/// Largest n for which the symmetric group is enumerated at all.
inline constexpr std::size_t kEnumerationGuard = 12;

/// One-line notation (sigma(1), ..., sigma(n)) of a bijection on {1..n}.
class Permutation {
public:
  Permutation() = default;
  /// Throws std::invalid_argument unless images is a rearrangement of 1..n.
  explicit Permutation(std::vector<int> images);

  static Permutation identity(std::size_t n);

  std::size_t size() const { return images_.size(); }
  std::span<const int> images() const { return images_; }
  /// sigma(i) for 1-based position i.
  int operator()(std::size_t i) const { return images_.at(i - 1); }

  friend bool operator==(const Permutation &, const Permutation &) = default;

private:
  std::vector<int> images_;
};

/// Number of positions i with sigma(i) > i.
std::size_t excedance_count(std::span<const int> images);
inline std::size_t excedance_count(const Permutation &p) { return excedance_count(p.images()); }

/// sigma(1) < sigma(2) > sigma(3) < ... ; vacuously true for n <= 1.
bool is_alternating_up_down(std::span<const int> images);
inline bool is_alternating_up_down(const Permutation &p) { return is_alternating_up_down(p.images()); }

/// Lexicographic single-pass stream over all n! permutations of {1..n}.
class PermutationStream {
public:
  /// Throws GuardError for n > kEnumerationGuard.
  explicit PermutationStream(std::size_t n);

  std::optional<Permutation> next();

  class iterator {
  public:
    using value_type = Permutation;
    using difference_type = std::ptrdiff_t;

    iterator() = default;
    explicit iterator(PermutationStream *owner) : owner_(owner) { ++*this; }

    const Permutation &operator*() const { return *current_; }
    const Permutation *operator->() const { return &*current_; }
    iterator &operator++() {
      current_ = owner_->next();
      return *this;
    }
    void operator++(int) { ++*this; }
    friend bool operator==(const iterator &it, std::default_sentinel_t) { return !it.current_; }

  private:
    PermutationStream *owner_ = nullptr;
    std::optional<Permutation> current_;
  };

  iterator begin() { return iterator(this); }
  std::default_sentinel_t end() { return {}; }

private:
  std::vector<int> state_;
  bool done_ = false;
};

inline PermutationStream enumerate_permutations(std::size_t n) { return PermutationStream(n); }

/// How brute-force aggregations walk the group. Parallel runs partition by
/// sigma(1) and combine partial results in partition order, so every mode
/// returns identical values.
enum class Execution { automatic, sequential, parallel };

/// Entry k counts permutations of length n with exactly k excedances (k < n).
std::vector<Integer> excedance_distribution(std::size_t n, Execution exec = Execution::automatic);

/// Sum over S_n of (-1)^exc.
Integer alternating_sum_bruteforce(std::size_t n, Execution exec = Execution::automatic);

/// Number of up-down permutations of length n.
Integer count_alternating(std::size_t n, Execution exec = Execution::automatic);

enum class Convention {
  standard, ///< sum of t^exc
  shifted,  ///< sum of t^(exc+1); defined as 1 for n = 0
};

Rational eulerian_poly_bruteforce(std::size_t n, const Rational &t, Convention convention,
                                  Execution exec = Execution::automatic);

} // namespace excedance
