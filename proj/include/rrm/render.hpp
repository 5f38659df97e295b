#pragma once

#include <string>
#include <vector>

#include "rrm/analysis.hpp"

namespace rrm {

/// `digits` significant figures, round-half-to-even, fixed-point notation in
/// the range tables live in (falls back to scientific for extreme exponents).
std::string format_significant(const BigReal& value, unsigned digits);

/// Shortest digit string that round-trips the value exactly, scientific form.
std::string format_full(const BigReal& value);

/// Aligned text table: one row per N, displayed levels, and for rank-D
/// models a trailing all-zero column standing in for the null block.
std::string render_text(const ConvergenceTable& table, unsigned digits);

/// Header `N,W1,...,Wk,null_count`; LF line endings.
std::string render_csv(const ConvergenceTable& table, unsigned digits);

/// Machine form: display strings plus full-precision strings per row.
std::string render_json(const ConvergenceTable& table, unsigned digits);

std::string render_cs_text(const std::vector<CauchySchwarzResult>& points, unsigned digits);
std::string render_cs_csv(const std::vector<CauchySchwarzResult>& points, unsigned digits);
std::string render_cs_json(const std::vector<CauchySchwarzResult>& points, unsigned digits);

/// Bound-report summary lines (used by the verification suite's detail text).
std::string render_bounds(const BoundReport& report, unsigned digits);

}  // namespace rrm
