#pragma once

// Output documents emitted by the command-line tool.
//
// CSV: comma separated, header row, LF line endings, shortest round-trip
// decimal for every number, empty field for an undefined metric.
// JSON: {"command": ..., "version": ..., "params": {...},
//        "columns": [...], "rows": [{column: number|null, ...}, ...]}

#include <charconv>
#include <cmath>
#include <optional>
#include <ostream>
#include <string>
#include <system_error>
#include <vector>

#include <json.hpp>

#include "twoatom/errors.hpp"
#include "twoatom/scenarios.hpp"

namespace twoatom {

inline constexpr const char* kToolVersion = "0.1.0";

struct OutputRecord {
  std::string command;
  std::string version = kToolVersion;
  nlohmann::ordered_json params = nlohmann::ordered_json::object();
  std::vector<std::string> columns;
  std::vector<std::vector<Metric>> rows;

  friend bool operator==(const OutputRecord&, const OutputRecord&) = default;
};

/// Parameter column followed by the metric columns.
inline void set_payload(OutputRecord& record, const CurveTable& table) {
  record.columns.clear();
  record.columns.push_back(table.parameter_name());
  for (const auto& name : table.metric_names()) record.columns.push_back(name);
  record.rows.clear();
  for (const auto& row : table.rows()) {
    std::vector<Metric> values{row.parameter};
    values.insert(values.end(), row.metrics.begin(), row.metrics.end());
    record.rows.push_back(std::move(values));
  }
}

/// Shortest decimal string that parses back to exactly `x`.
inline std::string format_number(double x) {
  if (!std::isfinite(x)) throw DomainError("cannot serialise a non-finite number");
  if (x == 0.0) x = 0.0;  // drop the sign of -0
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, x);
  if (res.ec != std::errc{}) throw Error("number formatting failed");
  return std::string(buf, res.ptr);
}

inline void write_csv(std::ostream& out, const OutputRecord& record) {
  for (std::size_t i = 0; i < record.columns.size(); ++i) out << (i ? "," : "") << record.columns[i];
  out << '\n';
  for (const auto& row : record.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out << ',';
      if (row[i]) out << format_number(*row[i]);
    }
    out << '\n';
  }
}

inline nlohmann::ordered_json to_json(const OutputRecord& record) {
  nlohmann::ordered_json doc;
  doc["command"] = record.command;
  doc["version"] = record.version;
  doc["params"] = record.params;
  doc["columns"] = record.columns;
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (const auto& row : record.rows) {
    if (row.size() != record.columns.size()) throw DimensionError("output row width mismatch");
    nlohmann::ordered_json obj = nlohmann::ordered_json::object();
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (row[i]) {
        const double v = *row[i];
        obj[record.columns[i]] = v == 0.0 ? 0.0 : v;
      } else {
        obj[record.columns[i]] = nullptr;
      }
    }
    rows.push_back(std::move(obj));
  }
  doc["rows"] = std::move(rows);
  return doc;
}

inline void write_json(std::ostream& out, const OutputRecord& record) { out << to_json(record).dump(2) << '\n'; }

inline OutputRecord record_from_json(const nlohmann::ordered_json& doc) {
  OutputRecord record;
  record.command = doc.at("command").get<std::string>();
  record.version = doc.at("version").get<std::string>();
  record.params = doc.at("params");
  record.columns = doc.at("columns").get<std::vector<std::string>>();
  for (const auto& obj : doc.at("rows")) {
    std::vector<Metric> row;
    for (const auto& name : record.columns) {
      const auto& v = obj.at(name);
      row.push_back(v.is_null() ? Metric{} : Metric{v.get<double>()});
    }
    record.rows.push_back(std::move(row));
  }
  return record;
}

}  // namespace twoatom
