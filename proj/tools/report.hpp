#pragma once

// Rendering of command results as JSON, CSV or markdown.

#include <cstdint>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include <json.hpp>

namespace sens::cli {

enum class FormatKind { Json, Csv, Markdown };

struct OutputFormat {
  FormatKind kind = FormatKind::Json;
  int precision = 4;  // decimals for CSV and markdown; at most 12
};

// Throws std::invalid_argument for names other than json, csv, md/markdown.
FormatKind parse_format_kind(const std::string& name);

using Cell = std::variant<std::monostate, std::string, std::int64_t, double, bool>;

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
};

// Settings the result depends on (sig, tails, ...), echoed in every output.
using Settings = std::vector<std::pair<std::string, std::string>>;

// JSON: {"settings": {...}, <key>: payload}. Doubles in the payload keep full
// precision so the document parses back to the same values.
std::string render_json(const Settings& settings, const std::string& key,
                        const nlohmann::json& payload);

// "# key: value" lines, then a header row and one line per row.
std::string render_csv(const Settings& settings, const Table& table, int precision);

// A settings line, then a pipe table.
std::string render_markdown(const Settings& settings, const Table& table, int precision);

std::string format_cell(const Cell& cell, int precision);

}  // namespace sens::cli
