#pragma once

#include <string>
#include <string_view>

#include "excedance/claims.hpp"

namespace excedance {

enum class Format { text, json };

/// Text: an aligned table with one row per result (id, reference, tested
/// range, verdict, first counterexample). JSON: the stable report schema,
/// with "meta" present only when the report carries metadata.
std::string render_report(const Report &report, Format format);

/// "n=3: lhs=-2 rhs=1"
std::string describe(const Counterexample &c);

} // namespace excedance
