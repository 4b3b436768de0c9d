#include "excedance/cli.hpp"

#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "excedance/claims.hpp"
#include "excedance/combinatorics.hpp"
#include "excedance/permutation.hpp"
#include "excedance/report.hpp"
#include "excedance/sequences.hpp"
#include "excedance/series.hpp"

namespace excedance {

namespace {

using json = nlohmann::ordered_json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

constexpr std::size_t kMaxSeriesOrder = 64;

struct GlobalFlags {
  std::string format = "text";
  bool no_meta = false;
  bool force = false;

  Format fmt() const { return format == "json" ? Format::json : Format::text; }
};

std::string join(const std::vector<std::string> &items, const std::string &sep) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i > 0) {
      out += sep;
    }
    out += items[i];
  }
  return out;
}

template <class T> std::vector<std::string> strings(const std::vector<T> &values) {
  std::vector<std::string> out;
  out.reserve(values.size());
  for (const auto &v : values) {
    out.push_back(v.to_string());
  }
  return out;
}

std::string cmd_seq(const std::string &name, int count, const GlobalFlags &g) {
  if (count < 1) {
    throw UsageError("--count must be at least 1");
  }
  const auto n = static_cast<std::size_t>(count);

  if (name == "eulerian") {
    std::vector<std::vector<std::string>> rows;
    for (std::size_t len = 1; len <= n; ++len) {
      rows.push_back(strings(eulerian_numbers(len)));
    }
    if (g.fmt() == Format::json) {
      json doc{{"name", name}, {"first_index", 1}, {"values", rows}};
      return doc.dump(2) + "\n";
    }
    std::string out;
    for (const auto &row : rows) {
      out += join(row, " ") + "\n";
    }
    return out;
  }

  std::vector<std::string> values;
  std::size_t first = 0;
  if (name == "tangent") {
    first = 1;
    for (std::size_t i = 0; i < n; ++i) {
      values.push_back(tangent(2 * i + 1).to_string());
    }
  } else if (name == "bernoulli") {
    for (std::size_t i = 0; i < n; ++i) {
      values.push_back(bernoulli(i).to_string());
    }
  } else if (name == "genocchi") {
    first = 1;
    for (std::size_t i = 1; i <= n; ++i) {
      values.push_back(genocchi(i).to_string());
    }
  } else if (name == "altsum") {
    for (std::size_t i = 0; i < n; ++i) {
      values.push_back(alternating_sum(i).to_string());
    }
  } else {
    throw UsageError("unknown sequence '" + name + "' (expected tangent, bernoulli, genocchi, eulerian, altsum)");
  }

  if (g.fmt() == Format::json) {
    json doc{{"name", name}, {"first_index", first}, {"values", values}};
    return doc.dump(2) + "\n";
  }
  return join(values, ", ") + "\n";
}

std::string cmd_dist(int n_arg, const GlobalFlags &g) {
  const std::size_t cap = g.force ? kEnumerationGuard : kBruteForceDefaultLimit;
  if (n_arg < 1 || static_cast<std::size_t>(n_arg) > cap) {
    throw UsageError("dist needs 1 <= n <= " + std::to_string(cap) +
                     (g.force ? std::string() : std::string(" (--force raises the limit to ") +
                                                    std::to_string(kEnumerationGuard) + ")"));
  }
  const auto n = static_cast<std::size_t>(n_arg);
  auto counts = excedance_distribution(n);
  Integer sum;
  for (const auto &c : counts) {
    sum += c;
  }
  const Integer fact = factorial(static_cast<std::uint32_t>(n));

  if (g.fmt() == Format::json) {
    json doc{{"n", n},
             {"counts", strings(counts)},
             {"sum", sum.to_string()},
             {"factorial", fact.to_string()},
             {"matches", sum == fact}};
    return doc.dump(2) + "\n";
  }
  std::ostringstream os;
  os << "k    count\n";
  for (std::size_t k = 0; k < counts.size(); ++k) {
    std::string key = std::to_string(k);
    os << key << std::string(key.size() < 5 ? 5 - key.size() : 1, ' ') << counts[k] << '\n';
  }
  os << "sum  " << sum << '\n';
  os << "n!   " << fact << (sum == fact ? " (match)" : " (MISMATCH)") << '\n';
  return os.str();
}

std::string cmd_series(const std::string &name, int order_arg, const std::string &t_arg, const GlobalFlags &g) {
  if (order_arg < 0 || static_cast<std::size_t>(order_arg) > kMaxSeriesOrder) {
    throw UsageError("--order must lie in [0, " + std::to_string(kMaxSeriesOrder) + "]");
  }
  const auto order = static_cast<std::size_t>(order_arg);
  if (name != "phi" && !t_arg.empty()) {
    throw UsageError("--t only applies to the phi series");
  }

  std::optional<Rational> t;
  Series s(order);
  std::string label;
  if (name == "tanh") {
    s = tanh_series(order);
    label = "tanh x";
  } else if (name == "genocchi") {
    s = genocchi_series(order);
    label = "2x/(e^x + 1)";
  } else if (name == "bernoulli") {
    s = bernoulli_series(order);
    label = "x/(e^x - 1)";
  } else if (name == "phi") {
    if (t_arg.empty()) {
      throw UsageError("phi needs --t");
    }
    try {
      t = Rational::parse(t_arg);
    } catch (const std::exception &e) {
      throw UsageError("--t: " + std::string(e.what()));
    }
    if (*t == Rational(1)) {
      throw UsageError("phi is undefined at t = 1: the denominator t - e^{x(t-1)} is 0 at x = 0");
    }
    s = phi_series(*t, order);
    label = "Phi(x, " + t->to_string() + ")";
  } else {
    throw UsageError("unknown series '" + name + "' (expected tanh, phi, genocchi, bernoulli)");
  }

  std::vector<std::string> coeffs, egf;
  for (std::size_t k = 0; k <= order; ++k) {
    coeffs.push_back(s[k].to_string());
    egf.push_back(egf_coeff(s, k).to_string());
  }

  if (g.fmt() == Format::json) {
    json doc;
    doc["name"] = name;
    if (t) {
      doc["t"] = t->to_string();
    }
    doc["order"] = order;
    doc["coefficients"] = coeffs;
    doc["egf"] = egf;
    return doc.dump(2) + "\n";
  }

  std::size_t w1 = std::string("k").size(), w2 = std::string("coeff").size();
  for (std::size_t k = 0; k <= order; ++k) {
    w1 = std::max(w1, std::to_string(k).size());
    w2 = std::max(w2, coeffs[k].size());
  }
  auto pad = [](const std::string &s, std::size_t w) { return s + std::string(w - s.size() + 2, ' '); };
  std::ostringstream os;
  os << label << " = " << s.to_string() << '\n';
  os << pad("k", w1) << pad("coeff", w2) << "egf\n";
  for (std::size_t k = 0; k <= order; ++k) {
    os << pad(std::to_string(k), w1) << pad(coeffs[k], w2) << egf[k] << '\n';
  }
  return os.str();
}

std::vector<std::string> split_ids(const std::string &spec) {
  std::vector<std::string> ids;
  std::string current;
  for (char c : spec + ",") {
    if (c == ',') {
      if (!current.empty()) {
        ids.push_back(current);
      }
      current.clear();
    } else if (c != ' ') {
      current += c;
    }
  }
  return ids;
}

int cmd_verify(const std::string &claims_arg, int max_n_arg, bool strict, const GlobalFlags &g, std::string &out) {
  if (max_n_arg < 0) {
    throw UsageError("--max-n must be nonnegative");
  }
  const auto max_n = static_cast<std::size_t>(max_n_arg);
  const auto &registry = ClaimRegistry::standard();

  std::vector<std::string> ids;
  if (claims_arg == "all") {
    for (const auto &c : registry.claims()) {
      ids.push_back(c.id);
    }
  } else {
    ids = split_ids(claims_arg);
    if (ids.empty()) {
      throw UsageError("--claims needs 'all' or a comma-separated id list");
    }
  }

  Report report = verify_claims(registry, ids, max_n, g.force);
  if (!g.no_meta) {
    report.meta = current_meta();
  }
  out = render_report(report, g.fmt());

  bool any_fail = false;
  bool all_expected = true;
  for (const auto &r : report.results) {
    any_fail = any_fail || r.verdict == Verdict::fail;
    all_expected = all_expected && r.verdict == expected_verdict(registry.find(r.id), r.tested);
  }
  if (strict) {
    return any_fail ? kExitStrictFailure : kExitOk;
  }
  return all_expected ? kExitOk : kExitStrictFailure;
}

} // namespace

int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
  CLI::App app{"Exact excedance statistics, tangent and Genocchi numbers, and identity checks", "excedance"};
  app.require_subcommand(1);

  GlobalFlags g;
  app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_flag("--no-meta", g.no_meta, "Omit timestamp and version from JSON reports");
  app.add_flag("--force", g.force, "Raise permutation enumeration guards to n = 12");

  std::string seq_name;
  int seq_count = 10;
  auto *seq = app.add_subcommand("seq", "Print the first values of a sequence")->fallthrough();
  seq->add_option("name", seq_name, "tangent | bernoulli | genocchi | eulerian | altsum")->required();
  seq->add_option("--count", seq_count, "Number of values");

  int dist_n = 0;
  auto *dist = app.add_subcommand("dist", "Tabulate permutations of length n by excedance count")->fallthrough();
  dist->add_option("n", dist_n, "Permutation length")->required();

  std::string series_name, series_t;
  int series_order = 10;
  auto *series = app.add_subcommand("series", "Print a truncated generating function")->fallthrough();
  series->add_option("name", series_name, "tanh | phi | genocchi | bernoulli")->required();
  series->add_option("--order", series_order, "Truncation order (at most 64)");
  series->add_option("--t", series_t, "Value of t for phi, as p or p/q");

  std::string verify_claims_arg = "all";
  int verify_max_n = static_cast<int>(kBruteForceDefaultLimit);
  bool verify_strict = false;
  auto *verify = app.add_subcommand("verify", "Check the registered identities")->fallthrough();
  verify->add_option("--claims", verify_claims_arg, "'all' or comma-separated claim ids");
  verify->add_option("--max-n", verify_max_n, "Largest index to test");
  verify->add_flag("--strict", verify_strict, "Exit 1 if any claim fails");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp &) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp &) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError &e) {
    err << "error: " << e.what() << "\n" << "run with --help for usage\n";
    return kExitUsage;
  }

  try {
    std::string text;
    int code = kExitOk;
    if (seq->parsed()) {
      text = cmd_seq(seq_name, seq_count, g);
    } else if (dist->parsed()) {
      text = cmd_dist(dist_n, g);
    } else if (series->parsed()) {
      text = cmd_series(series_name, series_order, series_t, g);
    } else {
      code = cmd_verify(verify_claims_arg, verify_max_n, verify_strict, g, text);
    }
    out << text;
    return code;
  } catch (const std::exception &e) {
    // Usage, guard and unknown-claim errors all land here.
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

} // namespace excedance
