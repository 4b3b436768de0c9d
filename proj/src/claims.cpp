#include "excedance/claims.hpp"

#include <algorithm>
#include <chrono>
#include <ctime>
#include <future>

#include "excedance/combinatorics.hpp"
#include "excedance/permutation.hpp"
#include "excedance/sequences.hpp"
#include "excedance/series.hpp"

namespace excedance {

std::string_view verdict_name(Verdict v) { return v == Verdict::pass ? "PASS" : "FAIL"; }

void ClaimRegistry::add(Claim claim) {
  if (claim.paper_ref.empty()) {
    throw std::invalid_argument("claim " + claim.id + " has no source reference");
  }
  if (!claim.evaluate) {
    throw std::invalid_argument("claim " + claim.id + " has no evaluator");
  }
  for (const auto &c : claims_) {
    if (c.id == claim.id) {
      throw std::invalid_argument("duplicate claim id " + claim.id);
    }
  }
  claims_.push_back(std::move(claim));
}

const Claim &ClaimRegistry::find(std::string_view id) const {
  for (const auto &c : claims_) {
    if (c.id == id) {
      return c;
    }
  }
  throw UnknownClaimError("unknown claim id '" + std::string(id) + "'");
}

namespace {

Rational sign_power(std::int64_t exponent) { return Rational(exponent % 2 == 0 ? 1 : -1); }

std::int64_t as_int(std::size_t n) { return static_cast<std::int64_t>(n); }

std::vector<Rational> sample_points() {
  return {Rational(-1), Rational(2), Rational(Integer(1), Integer(2)), Rational(-3)};
}

std::vector<Observation> egf_convention(IndexRange r, Convention convention) {
  std::vector<Observation> out;
  const auto points = sample_points();
  std::vector<Series> phis;
  for (const auto &t : points) {
    phis.push_back(phi_series(t, r.hi));
  }
  for (std::size_t n = r.lo; n <= r.hi; ++n) {
    for (std::size_t i = 0; i < points.size(); ++i) {
      out.push_back({n, egf_coeff(phis[i], n), eulerian_poly_bruteforce(n, points[i], convention)});
    }
  }
  return out;
}

// Residue checks on S_n: parity for odd n, then 0 mod 4 at n = 4k-1 and
// 2 mod 4 at n = 4k+1 (k >= 1).
std::vector<Observation> congruences(IndexRange r) {
  std::vector<Observation> out;
  const Integer two(2), four(4);
  for (std::size_t n = std::max<std::size_t>(r.lo, 1); n <= r.hi; ++n) {
    if (n % 2 == 0) {
      continue;
    }
    Integer s = alternating_sum(n);
    out.push_back({n, Rational(s.mod(two)), Rational(0)});
    if (n % 4 == 3) {
      out.push_back({n, Rational(s.mod(four)), Rational(0)});
    } else if (n >= 5) {
      out.push_back({n, Rational(s.mod(four)), Rational(2)});
    }
  }
  return out;
}

ClaimRegistry build_standard() {
  ClaimRegistry reg;

  reg.add({
      .id = "C1-egf-standard",
      .paper_ref = "Eulerian EGF identity",
      .statement = "n! [x^n] Phi(x,t) = sum over S_n of t^exc, t in {-1, 2, 1/2, -3}",
      .range = {0, 7},
      .brute_force = true,
      .first_failure = std::nullopt,
      .notes = "",
      .evaluate = [](IndexRange r) { return egf_convention(r, Convention::standard); },
  });

  reg.add({
      .id = "C2-egf-shifted",
      .paper_ref = "Eulerian polynomial definition with exc+1 exponent, read with the EGF identity",
      .statement = "n! [x^n] Phi(x,t) = sum over S_n of t^(exc+1), t in {-1, 2, 1/2, -3}",
      .range = {0, 7},
      .brute_force = true,
      .first_failure = 1,
      .notes = "Phi(x,t) generates the exponent-exc polynomials (C1-egf-standard); "
               "the exc+1 polynomials are t times those for n >= 1.",
      .evaluate = [](IndexRange r) { return egf_convention(r, Convention::shifted); },
  });

  reg.add({
      .id = "C3-phi-tanh",
      .paper_ref = "EGF evaluated at t = -1",
      .statement = "Phi(x,-1) = 1 + tanh x, coefficient by coefficient to order 12",
      .range = {0, 12},
      .brute_force = false,
      .first_failure = std::nullopt,
      .notes = "",
      .evaluate =
          [](IndexRange r) {
            Series lhs = phi_series(Rational(-1), r.hi);
            Series rhs = series_add(Series::constant(Rational(1), r.hi), tanh_series(r.hi));
            std::vector<Observation> out;
            for (std::size_t k = r.lo; k <= r.hi; ++k) {
              out.push_back({k, lhs[k], rhs[k]});
            }
            return out;
          },
  });

  reg.add({
      .id = "C4-sum-rule",
      .paper_ref = "explicit sum rule for the alternating sum",
      .statement = "S_0 = 1, S_2n = 0, S_(2n-1) = (-1)^(n-1) T_(2n-1)",
      .range = {0, 8},
      .brute_force = true,
      .first_failure = std::nullopt,
      .notes = "",
      .evaluate =
          [](IndexRange r) {
            std::vector<Observation> out;
            for (std::size_t n = r.lo; n <= r.hi; ++n) {
              out.push_back({n, Rational(alternating_sum(n)), Rational(alternating_sum_bruteforce(n))});
            }
            return out;
          },
  });

  reg.add({
      .id = "C5-parity",
      .paper_ref = "parity: vanishing for even n",
      .statement = "S_2n = 0 for n >= 1",
      .range = {2, 8},
      .brute_force = true,
      .first_failure = std::nullopt,
      .notes = "",
      .evaluate =
          [](IndexRange r) {
            std::vector<Observation> out;
            for (std::size_t n = r.lo; n <= r.hi; ++n) {
              if (n % 2 == 0) {
                out.push_back({n, Rational(alternating_sum_bruteforce(n)), Rational(0)});
              }
            }
            return out;
          },
  });

  reg.add({
      .id = "C6-tangent-bernoulli",
      .paper_ref = "tangent numbers via Bernoulli numbers",
      .statement = "T_m from Bernoulli numbers = T_m from tanh = number of up-down permutations, odd m",
      .range = {1, 11},
      .brute_force = true,
      .first_failure = std::nullopt,
      .notes = "",
      .evaluate =
          [](IndexRange r) {
            std::vector<Observation> out;
            for (std::size_t m = r.lo; m <= r.hi; ++m) {
              if (m % 2 == 0) {
                continue;
              }
              Rational via_bernoulli = tangent_rational(m, TangentRoute::bernoulli);
              out.push_back({m, via_bernoulli, tangent_rational(m, TangentRoute::series)});
              out.push_back({m, via_bernoulli, Rational(count_alternating(m))});
            }
            return out;
          },
  });

  reg.add({
      .id = "C7-integrality",
      .paper_ref = "integrality of the tangent numbers",
      .statement = "denominator of T_m (odd m <= 25, Bernoulli and tanh routes) and of G_n (n <= 16) is 1",
      .range = {1, 25},
      .brute_force = false,
      .first_failure = std::nullopt,
      .notes = "Each comparison is denominator = 1.",
      .evaluate =
          [](IndexRange r) {
            std::vector<Observation> out;
            for (std::size_t n = r.lo; n <= r.hi; ++n) {
              if (n % 2 == 1) {
                for (auto route : {TangentRoute::bernoulli, TangentRoute::series}) {
                  out.push_back({n, Rational(tangent_rational(n, route).denominator()), Rational(1)});
                }
              }
              if (n <= 16) {
                out.push_back({n, Rational(genocchi_rational(n).denominator()), Rational(1)});
              }
            }
            return out;
          },
  });

  reg.add({
      .id = "C8-genocchi-relation",
      .paper_ref = "relation between alternating sums and Genocchi numbers",
      .statement = "S_n = (-1)^floor((n+1)/2) G_(n+1)",
      .range = {0, 8},
      .brute_force = true,
      .first_failure = 3,
      .notes = "Holds instead for n >= 1: S_n = -2^n G_(n+1) / (n+1).",
      .evaluate =
          [](IndexRange r) {
            std::vector<Observation> out;
            Series g = genocchi_series(r.hi + 1);
            for (std::size_t n = r.lo; n <= r.hi; ++n) {
              Rational rhs = sign_power(as_int((n + 1) / 2)) * egf_coeff(g, n + 1);
              out.push_back({n, Rational(alternating_sum_bruteforce(n)), rhs});
            }
            return out;
          },
  });

  reg.add({
      .id = "C9-genocchi-recurrence",
      .paper_ref = "Genocchi recurrence",
      .statement = "G_n = -sum_{k=1}^{n-1} C(n,k) G_k for n >= 2, G_1 = 1",
      .range = {1, 12},
      .brute_force = false,
      .first_failure = 2,
      .notes = "Holds instead with a factor 1/2: G_n = -(1/2) sum_{k=1}^{n-1} C(n,k) G_k.",
      .evaluate =
          [](IndexRange r) {
            std::vector<Observation> out;
            Series g = genocchi_series(r.hi);
            std::vector<Rational> rec(r.hi + 1);
            rec[1] = Rational(1);
            for (std::size_t n = 2; n <= r.hi; ++n) {
              Rational acc;
              for (std::size_t k = 1; k < n; ++k) {
                acc += Rational(binomial(static_cast<std::uint32_t>(n), as_int(k))) * rec[k];
              }
              rec[n] = -acc;
            }
            for (std::size_t n = r.lo; n <= r.hi; ++n) {
              out.push_back({n, rec[n], egf_coeff(g, n)});
            }
            return out;
          },
  });

  reg.add({
      .id = "C10-congruences",
      .paper_ref = "congruences of the alternating sums",
      .statement = "S_(2n-1) = 0 mod 2; S_(4n-1) = 0 mod 4; S_(4n+1) = 2 mod 4 (n >= 1)",
      .range = {1, 13},
      .brute_force = false,
      .first_failure = 1,
      .notes = "Each comparison is a least nonnegative residue against the asserted residue.",
      .evaluate = congruences,
  });

  reg.add({
      .id = "C11-signed-recurrence",
      .paper_ref = "signed recurrence with exponent f(n,k)",
      .statement = "S_n = sum_{k=1}^{n-1} (-1)^f(n,k) C(n+1,k) S_k, f(n,k) = floor((n+1)/2) - floor((k+1)/2)",
      .range = {2, 8},
      .brute_force = true,
      .first_failure = 2,
      .notes = "",
      .evaluate =
          [](IndexRange r) {
            std::vector<Observation> out;
            for (std::size_t n = r.lo; n <= r.hi; ++n) {
              Rational acc;
              for (std::size_t k = 1; k < n; ++k) {
                std::int64_t f = as_int((n + 1) / 2) - as_int((k + 1) / 2);
                acc += sign_power(f) * Rational(binomial(static_cast<std::uint32_t>(n + 1), as_int(k))) *
                       Rational(alternating_sum(k));
              }
              out.push_back({n, acc, Rational(alternating_sum_bruteforce(n))});
            }
            return out;
          },
  });

  reg.add({
      .id = "C12-insertion-recurrence",
      .paper_ref = "insertion recurrence for the alternating sums",
      .statement = "S_(n+1) = sum_{k=0}^{n} (-1)^k C(n,k) S_k",
      .range = {0, 7},
      .brute_force = true,
      .first_failure = 2,
      .notes = "",
      .evaluate =
          [](IndexRange r) {
            std::vector<Observation> out;
            for (std::size_t n = r.lo; n <= r.hi; ++n) {
              Rational acc;
              for (std::size_t k = 0; k <= n; ++k) {
                acc += sign_power(as_int(k)) * Rational(binomial(static_cast<std::uint32_t>(n), as_int(k))) *
                       Rational(alternating_sum(k));
              }
              out.push_back({n, acc, Rational(alternating_sum_bruteforce(n + 1))});
            }
            return out;
          },
  });

  reg.add({
      .id = "C13-odd-function",
      .paper_ref = "tanh is odd",
      .statement = "[x^k] tanh x = 0 for even k <= 20",
      .range = {0, 20},
      .brute_force = false,
      .first_failure = std::nullopt,
      .notes = "",
      .evaluate =
          [](IndexRange r) {
            std::vector<Observation> out;
            Series t = tanh_series(r.hi);
            for (std::size_t k = r.lo; k <= r.hi; ++k) {
              if (k % 2 == 0) {
                out.push_back({k, t[k], Rational(0)});
              }
            }
            return out;
          },
  });

  return reg;
}

} // namespace

const ClaimRegistry &ClaimRegistry::standard() {
  static const ClaimRegistry registry = build_standard();
  return registry;
}

IndexRange tested_range(const Claim &claim, std::size_t max_n) {
  return {claim.range.lo, std::min(claim.range.hi, max_n)};
}

Verdict expected_verdict(const Claim &claim, IndexRange tested) {
  if (claim.first_failure && tested.contains(*claim.first_failure)) {
    return Verdict::fail;
  }
  return Verdict::pass;
}

ClaimResult verify_claim(const Claim &claim, std::size_t max_n, bool force) {
  const IndexRange tested = tested_range(claim, max_n);
  if (claim.brute_force && !force && tested.hi > kBruteForceDefaultLimit) {
    throw GuardError(claim.id + ": brute-force leg capped at n = " + std::to_string(kBruteForceDefaultLimit) +
                     "; pass --force to go to " + std::to_string(kEnumerationGuard));
  }
  ClaimResult result{
      .id = claim.id,
      .paper_ref = claim.paper_ref,
      .verdict = Verdict::pass,
      .tested = tested,
      .counterexamples = {},
      .notes = claim.notes,
  };
  if (tested.empty()) {
    return result;
  }
  for (const auto &obs : claim.evaluate(tested)) {
    if (obs.lhs != obs.rhs) {
      result.counterexamples.push_back({obs.n, obs.lhs.to_string(), obs.rhs.to_string()});
    }
  }
  if (!result.counterexamples.empty()) {
    result.verdict = Verdict::fail;
  }
  return result;
}

ClaimResult verify_claim(std::string_view id, std::size_t max_n, bool force) {
  return verify_claim(ClaimRegistry::standard().find(id), max_n, force);
}

Report verify_claims(const ClaimRegistry &registry, std::span<const std::string> ids, std::size_t max_n,
                     bool force, Schedule schedule) {
  std::vector<const Claim *> selected;
  for (const auto &id : ids) {
    selected.push_back(&registry.find(id));
  }
  // Guard violations surface before any work starts.
  for (const Claim *c : selected) {
    if (c->brute_force && !force && tested_range(*c, max_n).hi > kBruteForceDefaultLimit) {
      verify_claim(*c, max_n, force);
    }
  }

  Report report;
  report.max_n = max_n;
  if (schedule == Schedule::parallel) {
    std::vector<std::future<ClaimResult>> jobs;
    for (const Claim *c : selected) {
      jobs.push_back(std::async(std::launch::async, [c, max_n, force] { return verify_claim(*c, max_n, force); }));
    }
    for (auto &j : jobs) {
      report.results.push_back(j.get());
    }
  } else {
    for (const Claim *c : selected) {
      report.results.push_back(verify_claim(*c, max_n, force));
    }
  }
  return report;
}

Report verify_all(std::size_t max_n, bool force, Schedule schedule) {
  const auto &registry = ClaimRegistry::standard();
  std::vector<std::string> ids;
  for (const auto &c : registry.claims()) {
    ids.push_back(c.id);
  }
  return verify_claims(registry, ids, max_n, force, schedule);
}

ReportMeta current_meta() {
  std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm utc{};
  gmtime_r(&now, &utc);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &utc);
  return {buf, std::string(kToolVersion)};
}

} // namespace excedance
