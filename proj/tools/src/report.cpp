#include "asianlt/cli/report.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>

#include <fmt/format.h>
#include <json.hpp>

namespace asianlt::cli {

namespace {

using Json = nlohmann::ordered_json;

std::string format_cell(const Cell& cell, std::string_view empty) {
  struct Visitor {
    std::string_view empty;
    std::string operator()(std::monostate) const { return std::string(empty); }
    std::string operator()(long long v) const { return fmt::format("{}", v); }
    std::string operator()(double v) const { return fmt::format("{:.12g}", v); }
    std::string operator()(bool v) const { return v ? "true" : "false"; }
    std::string operator()(const std::string& v) const { return v; }
  };
  return std::visit(Visitor{empty}, cell);
}

Json to_json(const Cell& cell) {
  struct Visitor {
    Json operator()(std::monostate) const { return nullptr; }
    Json operator()(long long v) const { return v; }
    Json operator()(double v) const { return v; }
    Json operator()(bool v) const { return v; }
    Json operator()(const std::string& v) const { return v; }
  };
  return std::visit(Visitor{}, cell);
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + '"';
}

void render_csv(const Report& r, std::ostream& out) {
  for (std::size_t i = 0; i < r.columns.size(); ++i) {
    out << (i ? "," : "") << r.columns[i];
  }
  out << '\n';
  for (const auto& row : r.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      out << (i ? "," : "") << csv_escape(format_cell(row[i], ""));
    }
    out << '\n';
  }
}

void render_json(const Report& r, std::ostream& out) {
  Json doc;
  doc["command"] = r.command;
  Json rows = Json::array();
  for (const auto& row : r.rows) {
    Json obj = Json::object();
    for (std::size_t i = 0; i < row.size(); ++i) obj[r.columns[i]] = to_json(row[i]);
    rows.push_back(std::move(obj));
  }
  doc["rows"] = std::move(rows);
  Json summary = Json::object();
  for (const auto& [key, value] : r.summary) summary[key] = to_json(value);
  doc["summary"] = std::move(summary);
  out << doc.dump(2) << '\n';
}

void render_text(const Report& r, std::ostream& out) {
  if (r.rows.size() == 1) {
    std::size_t width = 0;
    for (const auto& c : r.columns) width = std::max(width, c.size());
    for (const auto& [k, v] : r.summary) width = std::max(width, k.size());
    for (std::size_t i = 0; i < r.columns.size(); ++i) {
      out << fmt::format("{:<{}}  {}\n", r.columns[i], width, format_cell(r.rows[0][i], "-"));
    }
  } else if (!r.rows.empty()) {
    std::vector<std::size_t> widths;
    for (const auto& c : r.columns) widths.push_back(c.size());
    std::vector<std::vector<std::string>> cells;
    for (const auto& row : r.rows) {
      auto& line = cells.emplace_back();
      for (std::size_t i = 0; i < row.size(); ++i) {
        line.push_back(format_cell(row[i], "-"));
        widths[i] = std::max(widths[i], line.back().size());
      }
    }
    for (std::size_t i = 0; i < r.columns.size(); ++i) {
      out << fmt::format("{}{:<{}}", i ? "  " : "", r.columns[i], widths[i]);
    }
    out << '\n';
    for (const auto& line : cells) {
      for (std::size_t i = 0; i < line.size(); ++i) {
        out << fmt::format("{}{:<{}}", i ? "  " : "", line[i], widths[i]);
      }
      out << '\n';
    }
  }
  if (!r.summary.empty() && r.rows.size() != 1) out << '\n';
  std::size_t width = 0;
  for (const auto& [k, v] : r.summary) width = std::max(width, k.size());
  if (r.rows.size() == 1) {
    for (const auto& c : r.columns) width = std::max(width, c.size());
  }
  for (const auto& [k, v] : r.summary) {
    out << fmt::format("{:<{}}  {}\n", k, width, format_cell(v, "-"));
  }
}

}  // namespace

Format parse_format(std::string_view name) {
  if (name == "text") return Format::text;
  if (name == "json") return Format::json;
  if (name == "csv") return Format::csv;
  throw std::invalid_argument("unknown output format: " + std::string(name));
}

void Report::add_row(std::vector<Cell> row) {
  if (row.size() != columns.size()) {
    throw std::logic_error("Report: row width does not match the column count");
  }
  rows.push_back(std::move(row));
}

void render(const Report& report, Format format, std::ostream& out) {
  switch (format) {
    case Format::text:
      render_text(report, out);
      break;
    case Format::json:
      render_json(report, out);
      break;
    case Format::csv:
      render_csv(report, out);
      break;
  }
}

}  // namespace asianlt::cli
