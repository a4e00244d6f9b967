#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace etapair::report {

enum class Format { Csv, Json };

/// One experiment cell: empty, boolean, integer, real, or string.
/// Reals serialize with 12 significant digits and a '.' separator.
class Value {
 public:
  Value() = default;
  Value(bool b) : data_(b) {}
  Value(int i) : data_(static_cast<std::int64_t>(i)) {}
  Value(std::int64_t i) : data_(i) {}
  Value(double d) : data_(d) {}
  Value(std::string s) : data_(std::move(s)) {}
  Value(const char* s) : data_(std::string(s)) {}

  bool is_empty() const { return std::holds_alternative<std::monostate>(data_); }
  bool is_bool() const { return std::holds_alternative<bool>(data_); }
  bool is_int() const { return std::holds_alternative<std::int64_t>(data_); }
  bool is_real() const { return std::holds_alternative<double>(data_); }
  bool is_string() const { return std::holds_alternative<std::string>(data_); }

  bool as_bool() const { return std::get<bool>(data_); }
  std::int64_t as_int() const { return std::get<std::int64_t>(data_); }
  double as_real() const { return std::get<double>(data_); }
  const std::string& as_string() const { return std::get<std::string>(data_); }

  /// Unquoted textual form; the empty value renders as the empty string.
  std::string to_text() const;

 private:
  std::variant<std::monostate, bool, std::int64_t, double, std::string> data_;
};

/// One emitted row: ordered key/value pairs, params before results.
/// Keys are lowercase snake_case.
struct ReportRecord {
  std::string experiment;
  std::vector<std::pair<std::string, Value>> params;
  std::vector<std::pair<std::string, Value>> results;
};

/// 12 significant digits, locale-independent.
std::string format_real(double v);

/// CSV: one mandatory header row, comma separators, LF endings.
/// JSON: UTF-8 array of objects in insertion key order.
/// Records must share one key sequence; output is byte-stable for equal
/// inputs.
std::string emit(std::span<const ReportRecord> records, Format format);

}  // namespace etapair::report
