#pragma once

#include <string>

#include "lmg/io/table.hpp"

namespace lmg::io {

/// {"meta": {...}, "columns": [...], "rows": [{column: value, ...}, ...]}
/// with keys in insertion order and null for undefined cells.
std::string to_json(const Table& t);
void emit_json(const Table& t, const std::string& path);
Table parse_json(const std::string& text);

}  // namespace lmg::io
