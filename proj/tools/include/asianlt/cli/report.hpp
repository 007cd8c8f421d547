#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace asianlt::cli {

enum class Format { text, json, csv };

[[nodiscard]] Format parse_format(std::string_view name);

/// A cell: empty (missing value), integer, real, boolean or text.
using Cell = std::variant<std::monostate, long long, double, bool, std::string>;

/// Rows with a fixed column order plus scalar summary fields. CSV output
/// carries the rows only; text and JSON carry both.
struct Report {
  std::string command;
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
  std::vector<std::pair<std::string, Cell>> summary;

  void add_row(std::vector<Cell> row);
};

void render(const Report& report, Format format, std::ostream& out);

}  // namespace asianlt::cli
