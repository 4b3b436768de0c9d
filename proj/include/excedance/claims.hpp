#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "excedance/errors.hpp"
#include "excedance/rational.hpp"

namespace excedance {

/// Default cap on indices reached by brute-force legs; --force lifts it.
inline constexpr std::size_t kBruteForceDefaultLimit = 8;

/// Inclusive index interval; empty when hi < lo.
struct IndexRange {
  std::size_t lo = 0;
  std::size_t hi = 0;

  bool empty() const { return hi < lo; }
  bool contains(std::size_t n) const { return lo <= n && n <= hi; }
  friend bool operator==(const IndexRange &, const IndexRange &) = default;
};

/// Both sides of an identity at one index.
struct Observation {
  std::size_t n;
  Rational lhs;
  Rational rhs;
};

struct Claim {
  std::string id;
  std::string paper_ref;
  std::string statement;
  IndexRange range;
  /// True when one side enumerates permutations.
  bool brute_force = false;
  /// First index at which the identity is known to break, or nullopt when it
  /// holds on the whole declared range.
  std::optional<std::size_t> first_failure;
  std::string notes;
  /// Deterministic; returns every comparison made inside `tested`.
  std::function<std::vector<Observation>(IndexRange tested)> evaluate;
};

enum class Verdict { pass, fail };

std::string_view verdict_name(Verdict v);

struct Counterexample {
  std::size_t n;
  std::string lhs;
  std::string rhs;
  friend bool operator==(const Counterexample &, const Counterexample &) = default;
};

struct ClaimResult {
  std::string id;
  std::string paper_ref;
  Verdict verdict = Verdict::pass;
  IndexRange tested;
  std::vector<Counterexample> counterexamples; // empty iff verdict == pass
  std::string notes;
};

class UnknownClaimError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

class ClaimRegistry {
public:
  /// Rejects claims without a source reference, without an evaluator, or
  /// with a duplicate id (std::invalid_argument).
  void add(Claim claim);

  const Claim &find(std::string_view id) const; // throws UnknownClaimError
  std::span<const Claim> claims() const { return claims_; }
  std::size_t size() const { return claims_.size(); }

  /// The thirteen identities C1..C13.
  static const ClaimRegistry &standard();

private:
  std::vector<Claim> claims_;
};

/// Declared range intersected with [0, max_n].
IndexRange tested_range(const Claim &claim, std::size_t max_n);

/// Verdict the identity should produce on `tested`, from first_failure.
Verdict expected_verdict(const Claim &claim, IndexRange tested);

/// Throws GuardError when a brute-force claim is asked for max_n beyond
/// kBruteForceDefaultLimit without `force`.
ClaimResult verify_claim(const Claim &claim, std::size_t max_n, bool force = false);
ClaimResult verify_claim(std::string_view id, std::size_t max_n, bool force = false);

struct ReportMeta {
  std::string generated_at; // ISO-8601 UTC
  std::string version;
};

struct Report {
  std::size_t max_n = 0;
  std::vector<ClaimResult> results;
  std::optional<ReportMeta> meta;
};

enum class Schedule { sequential, parallel };

/// One result per requested id, in the order given. Unknown ids throw before
/// anything is evaluated.
Report verify_claims(const ClaimRegistry &registry, std::span<const std::string> ids, std::size_t max_n,
                     bool force = false, Schedule schedule = Schedule::parallel);

/// Every registered claim, in registry order.
Report verify_all(std::size_t max_n, bool force = false, Schedule schedule = Schedule::parallel);

inline constexpr std::string_view kToolVersion = "0.1.0";

ReportMeta current_meta();

} // namespace excedance
