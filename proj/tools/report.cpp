#include "report.hpp"

#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace sens::cli {
namespace {

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string settings_line(const Settings& settings) {
  std::string line;
  for (const auto& [key, value] : settings) {
    if (!line.empty()) line += ", ";
    line += key + " = " + value;
  }
  return line;
}

}  // namespace

FormatKind parse_format_kind(const std::string& name) {
  if (name == "json") return FormatKind::Json;
  if (name == "csv") return FormatKind::Csv;
  if (name == "md" || name == "markdown") return FormatKind::Markdown;
  throw std::invalid_argument("unknown format '" + name + "' (json, csv or md)");
}

std::string format_cell(const Cell& cell, int precision) {
  struct Visitor {
    int precision;
    std::string operator()(std::monostate) const { return ""; }
    std::string operator()(const std::string& s) const { return s; }
    std::string operator()(std::int64_t v) const { return std::to_string(v); }
    std::string operator()(bool v) const { return v ? "true" : "false"; }
    std::string operator()(double v) const {
      char buffer[64];
      std::snprintf(buffer, sizeof buffer, "%.*f", precision, v);
      // Avoid printing "-0.0000" for values that round to zero.
      std::string s = buffer;
      if (s.front() == '-' && s.find_first_not_of("-0.") == std::string::npos) s.erase(0, 1);
      return s;
    }
  };
  return std::visit(Visitor{precision}, cell);
}

std::string render_json(const Settings& settings, const std::string& key,
                        const nlohmann::json& payload) {
  nlohmann::ordered_json doc;
  nlohmann::ordered_json s = nlohmann::ordered_json::object();
  for (const auto& [k, v] : settings) s[k] = v;
  doc["settings"] = s;
  doc[key] = nlohmann::ordered_json::parse(payload.dump());
  return doc.dump(2) + "\n";
}

std::string render_csv(const Settings& settings, const Table& table, int precision) {
  std::ostringstream out;
  for (const auto& [key, value] : settings) out << "# " << key << ": " << value << "\n";
  for (std::size_t i = 0; i < table.columns.size(); ++i) {
    out << (i ? "," : "") << csv_escape(table.columns[i]);
  }
  out << "\n";
  for (const auto& row : table.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      out << (i ? "," : "") << csv_escape(format_cell(row[i], precision));
    }
    out << "\n";
  }
  return out.str();
}

std::string render_markdown(const Settings& settings, const Table& table, int precision) {
  std::ostringstream out;
  if (!settings.empty()) out << settings_line(settings) << "\n\n";
  out << "|";
  for (const auto& c : table.columns) out << " " << c << " |";
  out << "\n|";
  for (std::size_t i = 0; i < table.columns.size(); ++i) out << "---|";
  out << "\n";
  for (const auto& row : table.rows) {
    out << "|";
    for (const auto& cell : row) out << " " << format_cell(cell, precision) << " |";
    out << "\n";
  }
  return out.str();
}

}  // namespace sens::cli
