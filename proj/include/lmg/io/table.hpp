#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace lmg::io {

/// Null marks an undefined value (e.g. efficiency with Q_in = 0).
using Cell = std::variant<std::monostate, std::int64_t, double, std::string>;

bool is_null(const Cell& c) noexcept;
/// Integers widen to double; null and strings throw std::invalid_argument.
double as_double(const Cell& c);
std::int64_t as_int(const Cell& c);
std::optional<double> as_optional_double(const Cell& c);
const std::string& as_string(const Cell& c);

/// %.12g, the fixed CSV number format.
std::string format_number(double v);

using Meta = std::vector<std::pair<std::string, Cell>>;

struct Table {
  Meta meta;
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;

  std::size_t column_index(const std::string& name) const;  // std::out_of_range
  void add_row(std::vector<Cell> row);                       // DimensionError on width mismatch
};

/// Writes bytes to a file, creating parent directories. IoError on failure.
void write_file(const std::string& path, const std::string& contents);
std::string read_file(const std::string& path);

}  // namespace lmg::io
