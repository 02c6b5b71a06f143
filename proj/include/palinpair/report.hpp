#pragma once

#include <cstdint>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

namespace palinpair::report {

using Json = nlohmann::ordered_json;

enum class Severity { info, warning, error };

inline const char* severity_name(Severity s) {
  switch (s) {
    case Severity::info: return "info";
    case Severity::warning: return "warning";
    default: return "error";
  }
}

struct Finding {
  Severity severity = Severity::info;
  std::string message;
};

/// A machine-readable command result: parameter echo, row records under a
/// fixed column schema, findings (unsaturated rows, conjecture disagreements,
/// truncations), and the elapsed time. Serializes to JSON and, rows only, to
/// CSV. Timing is emitted only on request so identical inputs keep producing
/// byte-identical output.
struct RunReport {
  std::string command;
  std::vector<std::pair<std::string, std::string>> parameters;
  std::vector<std::string> columns;
  std::vector<Json> rows;  // objects keyed by `columns`
  std::vector<Finding> findings;
  std::int64_t elapsed_ms = 0;

  void param(std::string key, std::string value) {
    parameters.emplace_back(std::move(key), std::move(value));
  }

  void add_finding(Severity severity, std::string message) {
    findings.push_back({severity, std::move(message)});
  }

  bool has_error() const {
    for (const Finding& f : findings)
      if (f.severity == Severity::error) return true;
    return false;
  }

  int exit_code() const { return has_error() ? 1 : 0; }
};

inline Json to_json(const RunReport& r, bool include_timing = false) {
  Json j;
  j["command"] = r.command;
  Json params = Json::object();
  for (const auto& [k, v] : r.parameters) params[k] = v;
  j["parameters"] = std::move(params);
  j["rows"] = r.rows;
  Json findings = Json::array();
  for (const Finding& f : r.findings)
    findings.push_back({{"severity", severity_name(f.severity)}, {"message", f.message}});
  j["findings"] = std::move(findings);
  if (include_timing) j["elapsed_ms"] = r.elapsed_ms;
  return j;
}

namespace detail_ {

inline std::string csv_escape(const std::string& field) {
  if (field.find_first_of(",\"\n") == std::string::npos) return field;
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

inline std::string cell_text(const Json& row, const std::string& column) {
  if (!row.contains(column)) return "";
  const Json& v = row.at(column);
  if (v.is_string()) return v.get<std::string>();
  if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
  return v.dump();
}

}  // namespace detail_

/// RFC 4180 style: header line, then one line per row in column order.
inline std::string to_csv(const RunReport& r) {
  std::ostringstream out;
  for (std::size_t c = 0; c < r.columns.size(); ++c) {
    if (c) out << ',';
    out << detail_::csv_escape(r.columns[c]);
  }
  out << '\n';
  for (const Json& row : r.rows) {
    for (std::size_t c = 0; c < r.columns.size(); ++c) {
      if (c) out << ',';
      out << detail_::csv_escape(detail_::cell_text(row, r.columns[c]));
    }
    out << '\n';
  }
  return out.str();
}

/// Human-oriented aligned columns, with parameters and findings around the
/// table.
inline std::string to_text(const RunReport& r, bool include_timing = false) {
  std::ostringstream out;
  out << "# " << r.command;
  for (const auto& [k, v] : r.parameters) out << ' ' << k << '=' << v;
  out << '\n';

  std::vector<std::size_t> widths(r.columns.size());
  for (std::size_t c = 0; c < r.columns.size(); ++c) widths[c] = r.columns[c].size();
  std::vector<std::vector<std::string>> cells;
  cells.reserve(r.rows.size());
  for (const Json& row : r.rows) {
    std::vector<std::string> line(r.columns.size());
    for (std::size_t c = 0; c < r.columns.size(); ++c) {
      line[c] = detail_::cell_text(row, r.columns[c]);
      widths[c] = std::max(widths[c], line[c].size());
    }
    cells.push_back(std::move(line));
  }
  auto emit_line = [&](const std::vector<std::string>& line) {
    for (std::size_t c = 0; c < line.size(); ++c) {
      if (c) out << "  ";
      out << line[c];
      if (c + 1 < line.size())
        out << std::string(widths[c] - line[c].size(), ' ');
    }
    out << '\n';
  };
  if (!r.columns.empty()) emit_line(r.columns);
  for (const auto& line : cells) emit_line(line);
  for (const Finding& f : r.findings)
    out << severity_name(f.severity) << ": " << f.message << '\n';
  if (include_timing) out << "elapsed_ms: " << r.elapsed_ms << '\n';
  return out.str();
}

}  // namespace palinpair::report
