#include <doctest.h>

#include <sstream>

#include <json.hpp>

#include "excedance/cli.hpp"

using namespace excedance;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::size_t count_lines(const std::string &s) { return static_cast<std::size_t>(std::count(s.begin(), s.end(), '\n')); }

} // namespace

TEST_CASE("seq") {
  auto altsum = run({"seq", "altsum", "--count", "5"});
  CHECK(altsum.code == 0);
  CHECK(altsum.out == "1, 1, 0, -2, 0\n");

  CHECK(run({"seq", "genocchi", "--count", "3"}).out == "1, -1, 0\n");
  CHECK(run({"seq", "eulerian", "--count", "3"}).out == "1\n1 1\n1 4 1\n");
  CHECK(run({"seq", "tangent", "--count", "4"}).out == "1, 2, 16, 272\n");
  CHECK(run({"seq", "bernoulli", "--count", "3"}).out == "1, -1/2, 1/6\n");

  auto json = run({"seq", "altsum", "--count", "4", "--format", "json"});
  auto doc = nlohmann::json::parse(json.out);
  CHECK(doc["values"] == nlohmann::json::array({"1", "1", "0", "-2"}));

  auto bad = run({"seq", "fibonacci"});
  CHECK(bad.code == 2);
  CHECK(bad.out.empty());
  CHECK(run({"seq", "tangent", "--count", "0"}).code == 2);
}

TEST_CASE("dist") {
  auto three = run({"dist", "3"});
  CHECK(three.code == 0);
  CHECK(three.out == "k    count\n0    1\n1    4\n2    1\nsum  6\nn!   6 (match)\n");
  CHECK(run({"dist", "1"}).out == "k    count\n0    1\nsum  1\nn!   1 (match)\n");
  CHECK(run({"dist", "2"}).out == "k    count\n0    1\n1    1\nsum  2\nn!   2 (match)\n");

  auto guarded = run({"dist", "9"});
  CHECK(guarded.code == 2);
  CHECK(guarded.out.empty());
  CHECK(run({"dist", "0"}).code == 2);
  CHECK(run({"dist", "13", "--force"}).code == 2);

  auto forced = run({"dist", "9", "--force", "--format", "json"});
  CHECK(forced.code == 0);
  CHECK(nlohmann::json::parse(forced.out)["matches"] == true);
}

TEST_CASE("series") {
  auto tanh = run({"series", "tanh", "--order", "3"});
  CHECK(tanh.code == 0);
  CHECK(tanh.out.find("tanh x = 0 + 1*x + 0*x^2 + -1/3*x^3") != std::string::npos);

  auto tanh_json = nlohmann::json::parse(run({"series", "tanh", "--order", "3", "--format", "json"}).out);
  CHECK(tanh_json["coefficients"] == nlohmann::json::array({"0", "1", "0", "-1/3"}));
  CHECK(tanh_json["egf"] == nlohmann::json::array({"0", "1", "0", "-2"}));

  auto phi = nlohmann::json::parse(run({"series", "phi", "--t", "-1", "--order", "2", "--format", "json"}).out);
  CHECK(phi["coefficients"] == nlohmann::json::array({"1", "1", "0"}));
  CHECK(phi["t"] == "-1");

  auto bern = nlohmann::json::parse(run({"series", "bernoulli", "--order", "2", "--format", "json"}).out);
  CHECK(bern["egf"] == nlohmann::json::array({"1", "-1/2", "1/6"}));

  auto degenerate = run({"series", "phi", "--t", "1", "--order", "4"});
  CHECK(degenerate.code == 2);
  CHECK(degenerate.out.empty());
  CHECK(degenerate.err.find("denominator") != std::string::npos);

  CHECK(run({"series", "tanh", "--order", "65"}).code == 2);
  CHECK(run({"series", "phi", "--order", "3"}).code == 2);
  CHECK(run({"series", "tanh", "--t", "2"}).code == 2);
  CHECK(run({"series", "phi", "--t", "1/0"}).code == 2);
  CHECK(run({"series", "cosh"}).code == 2);
}

TEST_CASE("verify") {
  auto c5 = run({"verify", "--claims", "C5-parity", "--max-n", "8"});
  CHECK(c5.code == 0);
  CHECK(c5.out.find("PASS") != std::string::npos);
  CHECK(count_lines(c5.out) == 2);

  auto c8 = run({"verify", "--claims", "C8-genocchi-relation", "--max-n", "4"});
  CHECK(c8.code == 0);
  CHECK(c8.out.find("n=3") != std::string::npos);
  CHECK(run({"verify", "--claims", "C8-genocchi-relation", "--max-n", "4", "--strict"}).code == 1);

  auto zero = run({"verify", "--claims", "all", "--max-n", "0"});
  CHECK(zero.code == 0);
  CHECK(count_lines(zero.out) == 14);

  auto all = run({"verify"});
  CHECK(all.code == 0);
  CHECK(count_lines(all.out) == 14);
  CHECK(run({"verify", "--strict"}).code == 1);

  auto pair = run({"verify", "--claims", "C4-sum-rule,C13-odd-function", "--format", "json", "--no-meta"});
  auto doc = nlohmann::json::parse(pair.out);
  CHECK(doc["results"].size() == 2);
  CHECK(doc["results"][1]["id"] == "C13-odd-function");
  CHECK_FALSE(doc.contains("meta"));

  auto with_meta = nlohmann::json::parse(run({"verify", "--claims", "C5-parity", "--format", "json"}).out);
  CHECK(with_meta["meta"]["version"] == "0.1.0");

  auto unknown = run({"verify", "--claims", "C99-nope"});
  CHECK(unknown.code == 2);
  CHECK(unknown.out.empty());

  auto guard = run({"verify", "--max-n", "9"});
  CHECK(guard.code == 2);
  CHECK(guard.out.empty());
  CHECK(run({"verify", "--claims", "C6-tangent-bernoulli", "--max-n", "11", "--force"}).code == 0);
}

TEST_CASE("usage errors") {
  for (const auto &args : std::vector<std::vector<std::string>>{
           {}, {"frobnicate"}, {"seq"}, {"seq", "altsum", "--bogus"}, {"verify", "--format", "xml"},
           {"dist", "three"}, {"verify", "--max-n", "-1"}}) {
    auto r = run(args);
    CHECK(r.code == 2);
    CHECK(r.out.empty());
  }
  auto help = run({"--help"});
  CHECK(help.code == 0);
  CHECK(help.out.find("verify") != std::string::npos);
}

TEST_CASE("json verify output is byte-identical across runs") {
  std::vector<std::string> args{"verify", "--claims", "all", "--max-n", "8", "--format", "json", "--no-meta"};
  CHECK(run(args).out == run(args).out);
}
