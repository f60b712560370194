#include "lmg/io/json.hpp"

#include <stdexcept>

#include "json.hpp"

namespace lmg::io {

namespace {

using ojson = nlohmann::ordered_json;

ojson to_value(const Cell& c) {
  return std::visit(
      [](const auto& v) -> ojson {
        using V = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<V, std::monostate>) return nullptr;
        else return v;
      },
      c);
}

Cell from_value(const ojson& v) {
  if (v.is_null()) return std::monostate{};
  if (v.is_number_integer()) return v.get<std::int64_t>();
  if (v.is_number()) return v.get<double>();
  if (v.is_string()) return v.get<std::string>();
  if (v.is_boolean()) return static_cast<std::int64_t>(v.get<bool>());
  throw std::invalid_argument("unsupported JSON value: " + v.dump());
}

}  // namespace

std::string to_json(const Table& t) {
  ojson doc = ojson::object();
  ojson meta = ojson::object();
  for (const auto& [key, value] : t.meta) meta[key] = to_value(value);
  doc["meta"] = std::move(meta);
  doc["columns"] = t.columns;
  ojson rows = ojson::array();
  for (const auto& row : t.rows) {
    ojson obj = ojson::object();
    for (std::size_t i = 0; i < row.size(); ++i) obj[t.columns[i]] = to_value(row[i]);
    rows.push_back(std::move(obj));
  }
  doc["rows"] = std::move(rows);
  return doc.dump(2) + "\n";
}

void emit_json(const Table& t, const std::string& path) { write_file(path, to_json(t)); }

Table parse_json(const std::string& text) {
  const ojson doc = ojson::parse(text);
  Table t;
  for (const auto& [key, value] : doc.at("meta").items()) t.meta.emplace_back(key, from_value(value));
  t.columns = doc.at("columns").get<std::vector<std::string>>();
  for (const auto& obj : doc.at("rows")) {
    std::vector<Cell> row;
    for (const auto& col : t.columns) row.push_back(from_value(obj.at(col)));
    t.add_row(std::move(row));
  }
  return t;
}

}  // namespace lmg::io
