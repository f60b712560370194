#include "lmg/io/csv.hpp"

#include <charconv>
#include <sstream>
#include <stdexcept>

namespace lmg::io {

namespace {

std::string render(const Cell& c) {
  return std::visit(
      [](const auto& v) -> std::string {
        using V = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<V, std::monostate>) return "";
        else if constexpr (std::is_same_v<V, std::int64_t>) return std::to_string(v);
        else if constexpr (std::is_same_v<V, double>) return format_number(v);
        else return v;
      },
      c);
}

Cell infer(const std::string& s) {
  if (s.empty()) return std::monostate{};
  const char* first = s.data();
  const char* last = s.data() + s.size();
  std::int64_t i = 0;
  auto ri = std::from_chars(first, last, i);
  if (ri.ec == std::errc{} && ri.ptr == last) return i;
  double d = 0.0;
  auto rd = std::from_chars(first, last, d);
  if (rd.ec == std::errc{} && rd.ptr == last) return d;
  if (s == "inf" || s == "-inf" || s == "nan" || s == "-nan") return std::stod(s);
  return s;
}

std::vector<std::string> split(const std::string& line) {
  std::vector<std::string> out;
  std::string field;
  std::istringstream ss(line);
  while (std::getline(ss, field, ',')) out.push_back(field);
  if (!line.empty() && line.back() == ',') out.emplace_back();
  return out;
}

}  // namespace

std::string to_csv(const Table& t) {
  std::string out;
  for (const auto& [key, value] : t.meta) out += "# " + key + " = " + render(value) + "\n";
  for (std::size_t i = 0; i < t.columns.size(); ++i) {
    if (i) out += ',';
    out += t.columns[i];
  }
  out += '\n';
  for (const auto& row : t.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out += ',';
      out += render(row[i]);
    }
    out += '\n';
  }
  return out;
}

void emit_csv(const Table& t, const std::string& path) { write_file(path, to_csv(t)); }

Table parse_csv(const std::string& text) {
  Table t;
  std::istringstream in(text);
  std::string line;
  bool header = false;
  while (std::getline(in, line)) {
    if (!header && line.rfind("# ", 0) == 0) {
      const auto eq = line.find(" = ");
      if (eq == std::string::npos) throw std::invalid_argument("malformed meta line: " + line);
      t.meta.emplace_back(line.substr(2, eq - 2), infer(line.substr(eq + 3)));
      continue;
    }
    if (!header) {
      t.columns = split(line);
      header = true;
      continue;
    }
    std::vector<Cell> row;
    for (const auto& f : split(line)) row.push_back(infer(f));
    t.add_row(std::move(row));
  }
  return t;
}

}  // namespace lmg::io
