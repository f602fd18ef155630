#pragma once

// Tabular output shared by the subcommands. A table renders as one JSON
// object per row, CSV with a header, a markdown table, or aligned text.

#include <ostream>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "permuto/exact.hpp"

namespace permuto::cli {

enum class Format { kText, kJson, kCsv, kMarkdown };

Format parse_format(std::string_view name);

using Cell = std::variant<BigInt, BigRational, std::string, bool>;

/// JSON text for a cell. Integers are written as exact decimal literals of
/// any size and rationals as {"num": p, "den": q}.
std::string json_value(const Cell& cell);

/// Plain text for a cell; `fraction_always` writes integral rationals as p/1.
std::string plain_value(const Cell& cell, bool fraction_always = false);

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
};

/// {"key": value, ...} with keys in the given order.
std::string json_object(const std::vector<std::string>& keys, const std::vector<Cell>& values);

void render(const Table& table, Format format, std::ostream& out);

}  // namespace permuto::cli
