#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace gpgrowth {

enum class ReportFormat { Text, Json, Csv };

ReportFormat parse_report_format(const std::string& name);

/// Deterministic report: run metadata followed by named sections. A section
/// is either a table (columns + rows of strings) or a flat list of key/value
/// pairs. All values are stored as strings so rendering never reformats
/// numbers.
class Report {
 public:
  explicit Report(std::string command);

  void set_meta(const std::string& key, const std::string& value);
  void add_fields(const std::string& section, const std::vector<std::pair<std::string, std::string>>& fields);
  void add_table(const std::string& section, std::vector<std::string> columns,
                 std::vector<std::vector<std::string>> rows);
  void set_partial(const std::string& reason);
  bool partial() const { return partial_; }

  const nlohmann::ordered_json& data() const { return doc_; }
  std::string render(ReportFormat format) const;

 private:
  nlohmann::ordered_json doc_;
  bool partial_ = false;
};

// Fixed-precision decimal rendering used throughout reports.
std::string format_decimal(long double x);

}  // namespace gpgrowth
