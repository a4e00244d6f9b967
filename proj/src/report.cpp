#include "etapair/report.hpp"

#include <cstdio>
#include <cstdlib>
#include <stdexcept>

#include <json.hpp>

namespace etapair::report {

namespace {

std::vector<std::string> record_keys(const ReportRecord& record) {
  std::vector<std::string> keys;
  keys.reserve(record.params.size() + record.results.size());
  for (const auto& [key, value] : record.params) keys.push_back(key);
  for (const auto& [key, value] : record.results) keys.push_back(key);
  return keys;
}

void check_homogeneous(std::span<const ReportRecord> records) {
  if (records.empty()) return;
  const auto expected = record_keys(records.front());
  for (const auto& record : records.subspan(1)) {
    if (record_keys(record) != expected) {
      throw std::logic_error("heterogeneous record keys in one experiment");
    }
  }
}

std::string csv_escape(const std::string& field) {
  if (field.find_first_of(",\"\n") == std::string::npos) return field;
  std::string quoted = "\"";
  for (char c : field) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  quoted += '"';
  return quoted;
}

void append_cells(const std::vector<std::pair<std::string, Value>>& cells, bool& first,
                  std::string& line) {
  for (const auto& [key, value] : cells) {
    if (!first) line += ',';
    first = false;
    line += csv_escape(value.to_text());
  }
}

std::string emit_csv(std::span<const ReportRecord> records) {
  std::string out;
  if (records.empty()) return "\n";
  bool first = true;
  for (const auto& key : record_keys(records.front())) {
    if (!first) out += ',';
    first = false;
    out += csv_escape(key);
  }
  out += '\n';
  for (const auto& record : records) {
    std::string line;
    bool first_cell = true;
    append_cells(record.params, first_cell, line);
    append_cells(record.results, first_cell, line);
    out += line;
    out += '\n';
  }
  return out;
}

nlohmann::ordered_json json_value(const Value& value) {
  if (value.is_empty()) return nullptr;
  if (value.is_bool()) return value.as_bool();
  if (value.is_int()) return value.as_int();
  if (value.is_string()) return value.as_string();
  // Round through the 12-digit form so JSON and CSV agree on precision.
  return std::strtod(format_real(value.as_real()).c_str(), nullptr);
}

std::string emit_json(std::span<const ReportRecord> records) {
  nlohmann::ordered_json array = nlohmann::ordered_json::array();
  for (const auto& record : records) {
    nlohmann::ordered_json obj;
    obj["experiment"] = record.experiment;
    for (const auto& [key, value] : record.params) obj[key] = json_value(value);
    for (const auto& [key, value] : record.results) obj[key] = json_value(value);
    array.push_back(std::move(obj));
  }
  return array.dump(2) + "\n";
}

}  // namespace

std::string format_real(double v) {
  if (v == 0.0) v = 0.0;  // normalize -0
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

std::string Value::to_text() const {
  if (is_empty()) return "";
  if (is_bool()) return as_bool() ? "true" : "false";
  if (is_int()) return std::to_string(as_int());
  if (is_real()) return format_real(as_real());
  return as_string();
}

std::string emit(std::span<const ReportRecord> records, Format format) {
  check_homogeneous(records);
  return format == Format::Csv ? emit_csv(records) : emit_json(records);
}

}  // namespace etapair::report
