#ifndef DYNDEG_REPORT_HPP
#define DYNDEG_REPORT_HPP

#include <charconv>
#include <limits>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dyndeg/degrees.hpp"
#include "dyndeg/serialize.hpp"

namespace dyndeg {

/// Shortest decimal form that parses back to the same double.
inline std::string format_double(double x) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

/// RFC 4180 quoting, applied only when needed.
inline std::string csv_field(std::string_view s) {
  if (s.find_first_of(",\"\r\n") == std::string_view::npos) return std::string(s);
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

/// One output row: the report plus an optional verdict string.
struct ReportRow {
  DegreeReport report;
  std::optional<std::string> verdict;
};

/// Number of chi columns needed for the batch (2g + 1 for the largest g).
inline std::size_t chi_columns(const std::vector<ReportRow>& rows) {
  std::size_t n = 0;
  for (const auto& r : rows) n = std::max(n, r.report.chi.size());
  return n;
}

inline std::string csv_header(std::size_t n_chi, bool with_verdict) {
  std::string out = "label,g,type_summary";
  for (std::size_t i = 0; i < n_chi; ++i) out += ",chi_" + std::to_string(i);
  out += ",lambda1,degree,h_et,h_alg_partial,key_eq_residual,theorem_residual,pairing_ok";
  if (with_verdict) out += ",verdict";
  return out;
}

inline std::string csv_row(const ReportRow& row, std::size_t n_chi, bool with_verdict) {
  const DegreeReport& r = row.report;
  std::string out = csv_field(r.label) + "," + std::to_string(r.g) + "," + csv_field(r.type_summary);
  for (std::size_t i = 0; i < n_chi; ++i) {
    out += ",";
    if (i < r.chi.size()) out += format_double(r.chi[i]);
  }
  out += "," + format_double(r.lambda1);
  out += "," + r.degree.value.str();
  out += "," + format_double(r.h_et);
  out += "," + format_double(r.h_alg_partial);
  out += "," + format_double(r.key_eq_residual);
  out += "," + format_double(r.theorem_residual);
  out += r.pairing_ok ? ",true" : ",false";
  if (with_verdict) out += "," + csv_field(row.verdict.value_or(""));
  return out;
}

inline std::string format_csv(const std::vector<ReportRow>& rows, bool with_verdict) {
  const std::size_t n_chi = chi_columns(rows);
  std::string out = csv_header(n_chi, with_verdict) + "\n";
  for (const auto& row : rows) out += csv_row(row, n_chi, with_verdict) + "\n";
  return out;
}

inline Json report_json(const ReportRow& row) {
  const DegreeReport& r = row.report;
  Json j;
  j["label"] = r.label;
  j["g"] = r.g;
  j["type_summary"] = r.type_summary;
  j["chi"] = r.chi;
  j["lambda1"] = r.lambda1;
  const BigInt& deg = r.degree.value;
  if (deg >= std::numeric_limits<long long>::min() && deg <= std::numeric_limits<long long>::max()) {
    j["degree"] = deg.convert_to<long long>();
  } else {
    j["degree"] = deg.str();
  }
  j["degree_exact"] = r.degree.exact;
  j["h_et"] = r.h_et;
  j["h_alg_partial"] = r.h_alg_partial;
  j["key_eq_residual"] = r.key_eq_residual;
  j["theorem_residual"] = r.theorem_residual;
  j["pairing_ok"] = r.pairing_ok;
  j["omega_moduli"] = r.omega_moduli;
  if (r.translation_discarded) j["translation_discarded"] = true;
  if (row.verdict) j["verdict"] = *row.verdict;
  return j;
}

inline std::string format_json(const std::vector<ReportRow>& rows) {
  Json arr = Json::array();
  for (const auto& row : rows) arr.push_back(report_json(row));
  return arr.dump(1) + "\n";
}

}  // namespace dyndeg

#endif  // DYNDEG_REPORT_HPP
