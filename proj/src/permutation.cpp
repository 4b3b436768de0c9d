#include "excedance/permutation.hpp"

#include <algorithm>
#include <future>
#include <numeric>
#include <string>

namespace excedance {

namespace {

void check_guard(std::size_t n) {
  if (n > kEnumerationGuard) {
    throw GuardError("refusing to enumerate S_" + std::to_string(n) + ": n exceeds the guard of " +
                     std::to_string(kEnumerationGuard) +
                     "; raise kEnumerationGuard deliberately if you really mean it");
  }
}

// Visits every permutation of length n whose first image is `first`, in
// lexicographic order.
template <class Visit> void visit_with_first(std::size_t n, int first, Visit &visit) {
  std::vector<int> p(n);
  p[0] = first;
  int v = 1;
  for (std::size_t i = 1; i < n; ++i, ++v) {
    if (v == first) {
      ++v;
    }
    p[i] = v;
  }
  do {
    visit(std::span<const int>(p));
  } while (std::next_permutation(p.begin() + 1, p.end()));
}

// Folds `visit` over S_n. Each sigma(1)-partition accumulates into its own
// Acc; partials are merged in partition order.
template <class Acc, class Visit, class Merge>
Acc fold_permutations(std::size_t n, Execution exec, Acc init, Visit visit, Merge merge) {
  check_guard(n);
  if (n == 0) {
    Acc acc = init;
    visit(acc, std::span<const int>());
    return acc;
  }
  auto run_partition = [&](int first) {
    Acc acc = init;
    auto bound = [&](std::span<const int> p) { visit(acc, p); };
    visit_with_first(n, first, bound);
    return acc;
  };

  bool parallel = exec == Execution::parallel || (exec == Execution::automatic && n >= 9);
  std::vector<Acc> partials;
  partials.reserve(n);
  if (parallel) {
    std::vector<std::future<Acc>> jobs;
    jobs.reserve(n);
    for (std::size_t f = 1; f <= n; ++f) {
      jobs.push_back(std::async(std::launch::async, run_partition, static_cast<int>(f)));
    }
    for (auto &j : jobs) {
      partials.push_back(j.get());
    }
  } else {
    for (std::size_t f = 1; f <= n; ++f) {
      partials.push_back(run_partition(static_cast<int>(f)));
    }
  }
  Acc total = init;
  for (const auto &part : partials) {
    merge(total, part);
  }
  return total;
}

std::vector<std::uint64_t> excedance_tally(std::size_t n, Execution exec) {
  return fold_permutations(
      n, exec, std::vector<std::uint64_t>(n + 1, 0),
      [](std::vector<std::uint64_t> &acc, std::span<const int> p) { ++acc[excedance_count(p)]; },
      [](std::vector<std::uint64_t> &total, const std::vector<std::uint64_t> &part) {
        for (std::size_t k = 0; k < total.size(); ++k) {
          total[k] += part[k];
        }
      });
}

} // namespace

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  std::vector<int> sorted(images_);
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (sorted[i] != static_cast<int>(i + 1)) {
      throw std::invalid_argument("not a permutation of 1.." + std::to_string(images_.size()));
    }
  }
}

Permutation Permutation::identity(std::size_t n) {
  std::vector<int> images(n);
  std::iota(images.begin(), images.end(), 1);
  return Permutation(std::move(images));
}

std::size_t excedance_count(std::span<const int> images) {
  std::size_t count = 0;
  for (std::size_t i = 0; i < images.size(); ++i) {
    if (images[i] > static_cast<int>(i + 1)) {
      ++count;
    }
  }
  return count;
}

bool is_alternating_up_down(std::span<const int> images) {
  for (std::size_t i = 0; i + 1 < images.size(); ++i) {
    bool ascent = images[i] < images[i + 1];
    // Steps from odd 1-based positions must rise, the others must fall.
    if (ascent != (i % 2 == 0)) {
      return false;
    }
  }
  return true;
}

PermutationStream::PermutationStream(std::size_t n) : state_(n) {
  check_guard(n);
  std::iota(state_.begin(), state_.end(), 1);
}

std::optional<Permutation> PermutationStream::next() {
  if (done_) {
    return std::nullopt;
  }
  Permutation current(state_);
  done_ = !std::next_permutation(state_.begin(), state_.end());
  return current;
}

std::vector<Integer> excedance_distribution(std::size_t n, Execution exec) {
  auto tally = excedance_tally(n, exec);
  std::vector<Integer> out;
  out.reserve(n);
  for (std::size_t k = 0; k < n; ++k) {
    out.emplace_back(static_cast<std::int64_t>(tally[k]));
  }
  return out;
}

Integer alternating_sum_bruteforce(std::size_t n, Execution exec) {
  auto total = fold_permutations(
      n, exec, std::int64_t{0},
      [](std::int64_t &acc, std::span<const int> p) { acc += excedance_count(p) % 2 == 0 ? 1 : -1; },
      [](std::int64_t &t, std::int64_t part) { t += part; });
  return Integer(total);
}

Integer count_alternating(std::size_t n, Execution exec) {
  auto total = fold_permutations(
      n, exec, std::int64_t{0},
      [](std::int64_t &acc, std::span<const int> p) {
        if (is_alternating_up_down(p)) {
          ++acc;
        }
      },
      [](std::int64_t &t, std::int64_t part) { t += part; });
  return Integer(total);
}

Rational eulerian_poly_bruteforce(std::size_t n, const Rational &t, Convention convention,
                                  Execution exec) {
  if (convention == Convention::shifted && n == 0) {
    check_guard(n);
    return Rational(1);
  }
  // Permutations sharing an excedance count contribute identical terms, so
  // the sum is taken over the tally.
  auto tally = excedance_tally(n, exec);
  Rational sum;
  Rational power(1);
  for (std::size_t k = 0; k < tally.size(); ++k) {
    if (tally[k] != 0) {
      sum += Rational(static_cast<std::int64_t>(tally[k])) * power;
    }
    power *= t;
  }
  if (convention == Convention::shifted) {
    sum *= t;
  }
  return sum;
}

} // namespace excedance
