#include "gpgrowth/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace gpgrowth {

using nlohmann::ordered_json;

ReportFormat parse_report_format(const std::string& name) {
  if (name == "text") return ReportFormat::Text;
  if (name == "json") return ReportFormat::Json;
  if (name == "csv") return ReportFormat::Csv;
  throw std::invalid_argument("unknown format '" + name + "' (expected text, json or csv)");
}

std::string format_decimal(long double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  if (x == 0) return "0";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12Lg", x);
  return buf;
}

Report::Report(std::string command) {
  doc_["command"] = std::move(command);
  doc_["status"] = "complete";
  doc_["meta"] = ordered_json::object();
  doc_["sections"] = ordered_json::array();
}

void Report::set_meta(const std::string& key, const std::string& value) { doc_["meta"][key] = value; }

void Report::add_fields(const std::string& section, const std::vector<std::pair<std::string, std::string>>& fields) {
  ordered_json s;
  s["name"] = section;
  s["fields"] = ordered_json::object();
  for (const auto& [k, v] : fields) s["fields"][k] = v;
  doc_["sections"].push_back(std::move(s));
}

void Report::add_table(const std::string& section, std::vector<std::string> columns,
                       std::vector<std::vector<std::string>> rows) {
  for (const auto& r : rows)
    if (r.size() != columns.size()) throw std::logic_error("report row width does not match columns");
  ordered_json s;
  s["name"] = section;
  s["columns"] = std::move(columns);
  s["rows"] = std::move(rows);
  doc_["sections"].push_back(std::move(s));
}

void Report::set_partial(const std::string& reason) {
  partial_ = true;
  doc_["status"] = "partial";
  doc_["meta"]["partial_reason"] = reason;
}

namespace {

std::string csv_cell(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string render_text(const ordered_json& doc) {
  std::string out = "# " + doc["command"].get<std::string>() + " (" + doc["status"].get<std::string>() + ")\n";
  for (const auto& [k, v] : doc["meta"].items()) out += k + ": " + v.get<std::string>() + "\n";
  for (const auto& s : doc["sections"]) {
    out += "\n== " + s["name"].get<std::string>() + " ==\n";
    if (s.contains("fields")) {
      std::size_t w = 0;
      for (const auto& [k, v] : s["fields"].items()) w = std::max(w, k.size());
      for (const auto& [k, v] : s["fields"].items())
        out += k + std::string(w - k.size(), ' ') + "  " + v.get<std::string>() + "\n";
      continue;
    }
    std::vector<std::size_t> width;
    for (const auto& c : s["columns"]) width.push_back(c.get<std::string>().size());
    for (const auto& r : s["rows"])
      for (std::size_t i = 0; i < r.size(); ++i) width[i] = std::max(width[i], r[i].get<std::string>().size());
    auto line = [&](const ordered_json& cells) {
      std::string l;
      for (std::size_t i = 0; i < cells.size(); ++i) {
        std::string c = cells[i].get<std::string>();
        if (i) l += "  ";
        l += std::string(width[i] - c.size(), ' ') + c;
      }
      return l + "\n";
    };
    out += line(s["columns"]);
    for (const auto& r : s["rows"]) out += line(r);
  }
  return out;
}

std::string render_csv(const ordered_json& doc) {
  std::string out = "# command=" + doc["command"].get<std::string>() + "\n# status=" +
                    doc["status"].get<std::string>() + "\n";
  for (const auto& [k, v] : doc["meta"].items()) out += "# " + k + "=" + v.get<std::string>() + "\n";
  for (const auto& s : doc["sections"]) {
    out += "# section=" + s["name"].get<std::string>() + "\n";
    if (s.contains("fields")) {
      out += "key,value\n";
      for (const auto& [k, v] : s["fields"].items()) out += csv_cell(k) + "," + csv_cell(v.get<std::string>()) + "\n";
      continue;
    }
    auto line = [&](const ordered_json& cells) {
      std::string l;
      for (std::size_t i = 0; i < cells.size(); ++i) l += (i ? "," : "") + csv_cell(cells[i].get<std::string>());
      return l + "\n";
    };
    out += line(s["columns"]);
    for (const auto& r : s["rows"]) out += line(r);
  }
  return out;
}

}  // namespace

std::string Report::render(ReportFormat format) const {
  switch (format) {
    case ReportFormat::Json: return doc_.dump(2) + "\n";
    case ReportFormat::Csv: return render_csv(doc_);
    case ReportFormat::Text: break;
  }
  return render_text(doc_);
}

}  // namespace gpgrowth
