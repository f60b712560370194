#include "lmg/io/table.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "lmg/errors.hpp"

namespace lmg::io {

bool is_null(const Cell& c) noexcept { return std::holds_alternative<std::monostate>(c); }

double as_double(const Cell& c) {
  if (auto d = std::get_if<double>(&c)) return *d;
  if (auto i = std::get_if<std::int64_t>(&c)) return static_cast<double>(*i);
  throw std::invalid_argument("cell is not numeric");
}

std::int64_t as_int(const Cell& c) {
  if (auto i = std::get_if<std::int64_t>(&c)) return *i;
  if (auto d = std::get_if<double>(&c)) {
    const auto i = static_cast<std::int64_t>(*d);
    if (static_cast<double>(i) == *d) return i;
  }
  throw std::invalid_argument("cell is not an integer");
}

std::optional<double> as_optional_double(const Cell& c) {
  if (is_null(c)) return std::nullopt;
  return as_double(c);
}

const std::string& as_string(const Cell& c) {
  if (auto s = std::get_if<std::string>(&c)) return *s;
  throw std::invalid_argument("cell is not a string");
}

std::string format_number(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

std::size_t Table::column_index(const std::string& name) const {
  for (std::size_t i = 0; i < columns.size(); ++i)
    if (columns[i] == name) return i;
  throw std::out_of_range("no column named " + name);
}

void Table::add_row(std::vector<Cell> row) {
  if (row.size() != columns.size())
    throw DimensionError("row has " + std::to_string(row.size()) + " cells, table has " +
                         std::to_string(columns.size()) + " columns");
  rows.push_back(std::move(row));
}

void write_file(const std::string& path, const std::string& contents) {
  const std::filesystem::path p(path);
  std::error_code ec;
  if (p.has_parent_path()) {
    std::filesystem::create_directories(p.parent_path(), ec);
    if (ec) throw IoError(path, "cannot create directory (" + ec.message() + ")");
  }
  std::ofstream out(p, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError(path, "cannot open for writing");
  out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
  out.close();
  if (!out) throw IoError(path, "write failed");
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError(path, "cannot open for reading");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace lmg::io
