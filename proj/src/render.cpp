#include "rrm/render.hpp"

#include <json.hpp>

#include <sstream>

namespace rrm {

namespace {

// mpfr_get_str yields `digits` rounded mantissa digits plus the position of
// the decimal point; stitch the fixed-point form back together by hand.
struct Mantissa {
  bool negative = false;
  std::string digits;
  long exponent = 0;  // value = 0.digits × 10^exponent
};

Mantissa split(const BigReal& value, unsigned digits) {
  mpfr_exp_t exp = 0;
  char* raw = mpfr_get_str(nullptr, &exp, 10, digits, value.raw(), MPFR_RNDN);
  Mantissa m;
  std::string s(raw);
  mpfr_free_str(raw);
  if (!s.empty() && s[0] == '-') {
    m.negative = true;
    s.erase(0, 1);
  }
  m.digits = std::move(s);
  m.exponent = static_cast<long>(exp);
  return m;
}

}  // namespace

std::string format_significant(const BigReal& value, unsigned digits) {
  if (digits == 0) digits = 1;
  if (value.is_zero()) return "0";

  Mantissa m = split(value, digits);
  const long exp = m.exponent;
  std::string out = m.negative ? "-" : "";
  if (exp < -3 || exp > static_cast<long>(digits) + 6) {
    // Out of the tables' magnitude range; scientific keeps it readable.
    out += m.digits.substr(0, 1);
    if (digits > 1) out += "." + m.digits.substr(1);
    out += "e" + std::to_string(exp - 1);
    return out;
  }
  if (exp <= 0) {
    out += "0." + std::string(static_cast<std::size_t>(-exp), '0') + m.digits;
  } else if (exp < static_cast<long>(m.digits.size())) {
    out += m.digits.substr(0, static_cast<std::size_t>(exp)) + "." +
           m.digits.substr(static_cast<std::size_t>(exp));
  } else {
    out += m.digits + std::string(static_cast<std::size_t>(exp) - m.digits.size(), '0');
  }
  return out;
}

std::string format_full(const BigReal& value) {
  if (value.is_zero()) return "0";
  Mantissa m = split(value, 0);  // 0 = enough digits for exact round-trip
  std::string out = m.negative ? "-" : "";
  out += m.digits.substr(0, 1);
  if (m.digits.size() > 1) {
    std::string rest = m.digits.substr(1);
    while (rest.size() > 1 && rest.back() == '0') rest.pop_back();
    if (!(rest.size() == 1 && rest[0] == '0')) out += "." + rest;
  }
  out += "e" + std::to_string(m.exponent - 1);
  return out;
}

namespace {

std::vector<std::string> header_names(const ConvergenceTable& table) {
  std::vector<std::string> names{"N"};
  unsigned shown = table.levels;
  if (table.model.kind != ModelKind::kStandard) shown = std::min(shown, table.model.rank);
  for (unsigned k = 1; k <= shown; ++k) names.push_back("W" + std::to_string(k));
  return names;
}

}  // namespace

std::string render_text(const ConvergenceTable& table, unsigned digits) {
  const auto names = header_names(table);
  const bool null_column = table.model.kind != ModelKind::kStandard;

  std::vector<std::vector<std::string>> grid;
  grid.push_back(names);
  if (null_column) grid.back().push_back("W_k(k>D)");
  for (const auto& row : table.rows) {
    std::vector<std::string> cells{std::to_string(row.basis_size)};
    for (const auto& v : row.values) cells.push_back(format_significant(v, digits));
    while (cells.size() < names.size()) cells.emplace_back("-");
    if (null_column) cells.push_back("0");
    grid.push_back(std::move(cells));
  }

  std::vector<std::size_t> width(grid[0].size(), 0);
  for (const auto& row : grid)
    for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());

  std::ostringstream os;
  for (const auto& row : grid) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c) os << "  ";
      os << std::string(width[c] - row[c].size(), ' ') << row[c];
    }
    os << "\n";
  }
  return os.str();
}

std::string render_csv(const ConvergenceTable& table, unsigned digits) {
  const auto names = header_names(table);
  std::ostringstream os;
  for (std::size_t c = 0; c < names.size(); ++c) os << (c ? "," : "") << names[c];
  os << ",null_count\n";
  for (const auto& row : table.rows) {
    os << row.basis_size;
    for (std::size_t k = 1; k < names.size(); ++k)
      os << "," << (k <= row.values.size() ? format_significant(row.values[k - 1], digits) : "");
    os << "," << row.null_count << "\n";
  }
  return os.str();
}

std::string render_json(const ConvergenceTable& table, unsigned digits) {
  nlohmann::ordered_json j;
  j["model"] = table.model.label();
  if (table.model.kind == ModelKind::kWeighted) {
    // note: ordered_json invalidates references into an object on insert,
    // so subobjects are always built standalone and moved in
    nlohmann::ordered_json alphas = nlohmann::ordered_json::array();
    for (const auto& a : table.model.weights) alphas.push_back(a.str());
    j["alphas"] = std::move(alphas);
  }
  j["precision_digits"] = table.precision_digits;
  j["display_digits"] = digits;
  j["levels"] = table.levels;
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (const auto& row : table.rows) {
    nlohmann::ordered_json display = nlohmann::ordered_json::array();
    nlohmann::ordered_json full = nlohmann::ordered_json::array();
    for (const auto& v : row.values) {
      display.push_back(format_significant(v, digits));
      full.push_back(format_full(v));
    }
    nlohmann::ordered_json r;
    r["N"] = row.basis_size;
    r["values"] = std::move(display);
    r["full"] = std::move(full);
    r["null_count"] = row.null_count;
    if (row.null_count > 0) r["null_value"] = 0.0;
    rows.push_back(std::move(r));
  }
  j["rows"] = std::move(rows);
  return j.dump(2) + "\n";
}

std::string render_cs_text(const std::vector<CauchySchwarzResult>& points, unsigned digits) {
  std::vector<std::vector<std::string>> grid;
  grid.push_back({"N", "quotient", "overlap_path", "E_n", "quotient<=E_n"});
  for (const auto& p : points)
    grid.push_back({std::to_string(p.basis_size), format_significant(p.quotient, digits),
                    format_significant(p.bound, digits), format_significant(p.reference, digits),
                    p.below ? "yes" : "NO"});
  std::vector<std::size_t> width(grid[0].size(), 0);
  for (const auto& row : grid)
    for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
  std::ostringstream os;
  for (const auto& row : grid) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c) os << "  ";
      os << std::string(width[c] - row[c].size(), ' ') << row[c];
    }
    os << "\n";
  }
  return os.str();
}

std::string render_cs_csv(const std::vector<CauchySchwarzResult>& points, unsigned digits) {
  std::ostringstream os;
  os << "N,quotient,overlap_path,reference,below\n";
  for (const auto& p : points)
    os << p.basis_size << "," << format_significant(p.quotient, digits) << ","
       << format_significant(p.bound, digits) << "," << format_significant(p.reference, digits)
       << "," << (p.below ? 1 : 0) << "\n";
  return os.str();
}

std::string render_cs_json(const std::vector<CauchySchwarzResult>& points, unsigned digits) {
  nlohmann::ordered_json j = nlohmann::ordered_json::array();
  for (const auto& p : points) {
    nlohmann::ordered_json r;
    r["N"] = p.basis_size;
    r["quotient"] = format_significant(p.quotient, digits);
    r["quotient_full"] = format_full(p.quotient);
    r["overlap_path"] = format_full(p.bound);
    r["reference"] = format_full(p.reference);
    r["below"] = p.below;
    j.push_back(std::move(r));
  }
  return j.dump(2) + "\n";
}

std::string render_bounds(const BoundReport& report, unsigned digits) {
  std::ostringstream os;
  if (!report.applicable) {
    os << "bounds: not applicable (weights unordered or negative)\n";
    return os.str();
  }
  unsigned bad = 0;
  for (const auto& e : report.entries)
    if (!e.bound_ok) ++bad;
  os << "bounds: " << report.entries.size() - bad << "/" << report.entries.size()
     << " within one-sided tolerance";
  if (bad) {
    os << "; first violation:";
    for (const auto& e : report.entries)
      if (!e.bound_ok) {
        os << " N=" << e.basis_size << " k=" << e.level << " gap="
           << format_significant(e.gap, digits);
        break;
      }
  }
  os << "\n";
  for (const auto& [level, ok] : report.monotone)
    os << "monotone level " << level << ": " << (ok ? "ok" : "VIOLATED") << "\n";
  return os.str();
}

}  // namespace rrm
