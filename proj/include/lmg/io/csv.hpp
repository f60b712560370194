#pragma once

#include <string>

#include "lmg/io/table.hpp"

namespace lmg::io {

/// Meta lines `# key = value`, then a header row and one line per row.
/// Numbers use 12 significant digits, null is an empty field, LF endings.
std::string to_csv(const Table& t);
void emit_csv(const Table& t, const std::string& path);

/// Inverse of to_csv. Fields that parse fully as integers become integers,
/// other numeric fields doubles, empty fields null, the rest strings.
Table parse_csv(const std::string& text);

}  // namespace lmg::io
