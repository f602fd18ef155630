#include "render.hpp"

#include <algorithm>
#include <stdexcept>

#include "json.hpp"

namespace permuto::cli {

Format parse_format(std::string_view name) {
  if (name == "text") return Format::kText;
  if (name == "json") return Format::kJson;
  if (name == "csv") return Format::kCsv;
  if (name == "md") return Format::kMarkdown;
  throw std::invalid_argument("unknown format '" + std::string(name) + "'");
}

std::string json_value(const Cell& cell) {
  struct Visitor {
    std::string operator()(const BigInt& z) const { return to_string(z); }
    std::string operator()(const BigRational& q) const {
      return "{\"num\":" + to_string(numerator_of(q)) + ",\"den\":" + to_string(denominator_of(q)) + "}";
    }
    std::string operator()(const std::string& s) const { return nlohmann::json(s).dump(); }
    std::string operator()(bool b) const { return b ? "true" : "false"; }
  };
  return std::visit(Visitor{}, cell);
}

std::string plain_value(const Cell& cell, bool fraction_always) {
  if (const auto* q = std::get_if<BigRational>(&cell)) {
    if (fraction_always) return to_string(numerator_of(*q)) + "/" + to_string(denominator_of(*q));
    return to_string(*q);
  }
  if (const auto* z = std::get_if<BigInt>(&cell)) return to_string(*z);
  if (const auto* b = std::get_if<bool>(&cell)) return *b ? "true" : "false";
  return std::get<std::string>(cell);
}

std::string json_object(const std::vector<std::string>& keys, const std::vector<Cell>& values) {
  std::string out = "{";
  for (std::size_t j = 0; j < keys.size(); ++j) {
    if (j > 0) out += ',';
    out += nlohmann::json(keys[j]).dump();
    out += ':';
    out += json_value(values.at(j));
  }
  return out + "}";
}

namespace {

std::string csv_field(const std::string& text) {
  if (text.find_first_of(",\"\n") == std::string::npos) return text;
  std::string quoted = "\"";
  for (char c : text) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  return quoted + "\"";
}

void render_aligned(const Table& table, std::ostream& out) {
  std::vector<std::vector<std::string>> lines{table.columns};
  for (const auto& row : table.rows) {
    std::vector<std::string> line;
    for (const Cell& cell : row) line.push_back(plain_value(cell));
    lines.push_back(std::move(line));
  }
  std::vector<std::size_t> width(table.columns.size(), 0);
  for (const auto& line : lines) {
    for (std::size_t j = 0; j < line.size(); ++j) width[j] = std::max(width[j], line[j].size());
  }
  for (const auto& line : lines) {
    std::string text;
    for (std::size_t j = 0; j < line.size(); ++j) {
      if (j > 0) text += "  ";
      text += std::string(width[j] - line[j].size(), ' ') + line[j];
    }
    out << text << '\n';
  }
}

}  // namespace

void render(const Table& table, Format format, std::ostream& out) {
  switch (format) {
    case Format::kJson:
      for (const auto& row : table.rows) out << json_object(table.columns, row) << '\n';
      break;
    case Format::kCsv: {
      for (std::size_t j = 0; j < table.columns.size(); ++j) out << (j ? "," : "") << table.columns[j];
      out << '\n';
      for (const auto& row : table.rows) {
        for (std::size_t j = 0; j < row.size(); ++j) out << (j ? "," : "") << csv_field(plain_value(row[j], true));
        out << '\n';
      }
      break;
    }
    case Format::kMarkdown: {
      out << '|';
      for (const auto& column : table.columns) out << ' ' << column << " |";
      out << "\n|";
      for (std::size_t j = 0; j < table.columns.size(); ++j) out << " --- |";
      out << '\n';
      for (const auto& row : table.rows) {
        out << '|';
        for (const Cell& cell : row) out << ' ' << plain_value(cell) << " |";
        out << '\n';
      }
      break;
    }
    case Format::kText:
      render_aligned(table, out);
      break;
  }
}

}  // namespace permuto::cli
