#include "excedance/report.hpp"

#include <algorithm>
#include <array>
#include <sstream>

#include <json.hpp>

namespace excedance {

namespace {

std::string range_cell(const IndexRange &r) {
  if (r.empty()) {
    return "-";
  }
  return "[" + std::to_string(r.lo) + "," + std::to_string(r.hi) + "]";
}

std::string render_text(const Report &report) {
  using Row = std::array<std::string, 5>;
  std::vector<Row> rows;
  rows.push_back({"CLAIM", "REFERENCE", "RANGE", "VERDICT", "FIRST COUNTEREXAMPLE"});
  for (const auto &r : report.results) {
    rows.push_back({r.id, r.paper_ref, range_cell(r.tested), std::string(verdict_name(r.verdict)),
                    r.counterexamples.empty() ? "" : describe(r.counterexamples.front())});
  }
  std::array<std::size_t, 5> width{};
  for (const auto &row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      width[i] = std::max(width[i], row[i].size());
    }
  }
  std::ostringstream os;
  for (const auto &row : rows) {
    std::string line;
    for (std::size_t i = 0; i < row.size(); ++i) {
      line += row[i];
      if (i + 1 < row.size()) {
        line += std::string(width[i] - row[i].size() + 2, ' ');
      }
    }
    while (!line.empty() && line.back() == ' ') {
      line.pop_back();
    }
    os << line << '\n';
  }
  return os.str();
}

std::string render_json(const Report &report) {
  using json = nlohmann::ordered_json;
  json doc;
  doc["max_n"] = report.max_n;
  doc["results"] = json::array();
  for (const auto &r : report.results) {
    json item;
    item["id"] = r.id;
    item["paper_ref"] = r.paper_ref;
    item["verdict"] = verdict_name(r.verdict);
    item["range"] = json::array({r.tested.lo, r.tested.hi});
    item["counterexamples"] = json::array();
    for (const auto &c : r.counterexamples) {
      item["counterexamples"].push_back(json{{"n", c.n}, {"lhs", c.lhs}, {"rhs", c.rhs}});
    }
    item["notes"] = r.notes;
    doc["results"].push_back(std::move(item));
  }
  if (report.meta) {
    doc["meta"] = json{{"generated_at", report.meta->generated_at}, {"version", report.meta->version}};
  }
  return doc.dump(2) + "\n";
}

} // namespace

std::string describe(const Counterexample &c) {
  return "n=" + std::to_string(c.n) + ": lhs=" + c.lhs + " rhs=" + c.rhs;
}

std::string render_report(const Report &report, Format format) {
  return format == Format::json ? render_json(report) : render_text(report);
}

} // namespace excedance
