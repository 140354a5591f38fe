// Copyright 2026 The derivkey Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "derivkey/table.h"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <map>

#include "derivkey/error.h"
#include "derivkey/io.h"
#include "text_util.h"

namespace derivkey {
namespace {

// Percent cells are divided by 100 by shifting the decimal exponent, so
// "97" becomes the correctly rounded double nearest 0.97.
std::optional<double> ParsePercent(std::string_view cell) {
  if (!internal::ParseDouble(cell)) return std::nullopt;
  std::string text(cell);
  auto e = text.find_first_of("eE");
  if (e == std::string::npos) {
    text += "e-2";
  } else {
    long exponent = std::strtol(text.c_str() + e + 1, nullptr, 10);
    text = text.substr(0, e) + "e" + std::to_string(exponent - 2);
  }
  return internal::ParseDouble(text);
}

// Plain decimal text for value * 100 built from the shortest digits of
// `value`, so ParsePercent() recovers `value` exactly.
std::string FormatPercent(double value) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value, std::chars_format::scientific);
  std::string sci(buf, ptr);
  bool negative = sci[0] == '-';
  if (negative) sci.erase(0, 1);
  auto e = sci.find('e');
  int exponent = std::atoi(sci.c_str() + e + 1) + 2;
  std::string digits;
  for (char c : sci.substr(0, e)) {
    if (c != '.') digits += c;
  }
  if (digits == "0") return "0";
  std::string out;
  if (exponent >= 0) {
    std::size_t int_len = static_cast<std::size_t>(exponent) + 1;
    if (digits.size() <= int_len) {
      out = digits + std::string(int_len - digits.size(), '0');
    } else {
      out = digits.substr(0, int_len) + "." + digits.substr(int_len);
    }
  } else {
    out = "0." + std::string(static_cast<std::size_t>(-exponent - 1), '0') + digits;
  }
  return negative ? "-" + out : out;
}

std::string QuoteCsv(const std::string& field) {
  if (field.find_first_of(",\"\n") == std::string::npos) return field;
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

// Inverse of column_map: CSV column -> variable.
std::map<std::string, std::string> VariablesByColumn(const DatasetConfig& config) {
  std::map<std::string, std::string> out;
  for (const auto& [var, col] : config.column_map) out[col] = var;
  return out;
}

}  // namespace

std::optional<std::size_t> TableDocument::ColumnIndex(std::string_view name) const {
  auto it = std::find(columns.begin(), columns.end(), name);
  if (it == columns.end()) return std::nullopt;
  return static_cast<std::size_t>(it - columns.begin());
}

std::vector<std::string> SplitCsvLine(std::string_view line) {
  std::vector<std::string> fields;
  std::string current;
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    char c = line[i];
    if (quoted) {
      if (c == '"') {
        if (i + 1 < line.size() && line[i + 1] == '"') {
          current += '"';
          ++i;
        } else {
          quoted = false;
        }
      } else {
        current += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      fields.push_back(std::string(internal::Trim(current)));
      current.clear();
    } else {
      current += c;
    }
  }
  fields.push_back(std::string(internal::Trim(current)));
  return fields;
}

TableDocument LoadTable(std::string_view csv_text, const DatasetConfig& config) {
  std::vector<std::string_view> lines;
  for (auto line : internal::Lines(csv_text)) {
    if (!internal::Trim(line).empty()) lines.push_back(line);
  }
  if (lines.empty()) Fail(ErrorCode::kEmptyTable, "CSV input is empty");

  const auto header = SplitCsvLine(lines[0]);
  const auto by_column = VariablesByColumn(config);
  for (const auto& [var, col] : config.column_map) {
    if (std::find(header.begin(), header.end(), col) == header.end()) {
      Fail(ErrorCode::kMissingColumn,
           "CSV header lacks column '" + col + "' (variable " + var + ")");
    }
  }

  TableDocument table;
  std::vector<std::size_t> source;
  std::vector<bool> percent;
  for (std::size_t c = 0; c < header.size(); ++c) {
    auto it = by_column.find(header[c]);
    if (it == by_column.end()) continue;
    if (table.ColumnIndex(header[c])) {
      Fail(ErrorCode::kDuplicateName, "CSV header repeats column '" + header[c] + "'");
    }
    table.columns.push_back(header[c]);
    source.push_back(c);
    percent.push_back(config.percent_columns.count(it->second) != 0);
  }

  for (std::size_t r = 1; r < lines.size(); ++r) {
    const auto cells = SplitCsvLine(lines[r]);
    std::vector<double> row;
    row.reserve(source.size());
    for (std::size_t k = 0; k < source.size(); ++k) {
      const std::string& name = table.columns[k];
      if (source[k] >= cells.size()) {
        Fail(ErrorCode::kNonNumericCell,
             "row " + std::to_string(r) + ", column '" + name + "': cell is missing");
      }
      const std::string& cell = cells[source[k]];
      auto value = percent[k] ? ParsePercent(cell) : internal::ParseDouble(cell);
      if (!value) {
        Fail(ErrorCode::kNonNumericCell, "row " + std::to_string(r) + ", column '" + name +
                                             "': '" + cell + "' is not a number");
      }
      row.push_back(*value);
    }
    table.rows.push_back(std::move(row));
  }
  if (table.rows.empty()) Fail(ErrorCode::kEmptyTable, "CSV input has a header but no data rows");
  return table;
}

std::string WriteTableCsv(const TableDocument& table, const DatasetConfig& config) {
  const auto by_column = VariablesByColumn(config);
  std::vector<bool> percent;
  std::string out;
  for (std::size_t c = 0; c < table.columns.size(); ++c) {
    if (c > 0) out += ",";
    out += QuoteCsv(table.columns[c]);
    auto it = by_column.find(table.columns[c]);
    percent.push_back(it != by_column.end() && config.percent_columns.count(it->second) != 0);
  }
  out += "\n";
  for (const auto& row : table.rows) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c > 0) out += ",";
      out += percent[c] ? FormatPercent(row[c]) : FormatDouble(row[c]);
    }
    out += "\n";
  }
  return out;
}

Point RowPoint(const TableDocument& table, std::size_t row, const DatasetConfig& config) {
  if (row >= table.rows.size()) {
    Fail(ErrorCode::kInvalidArgument, "row " + std::to_string(row + 1) + " does not exist (" +
                                          std::to_string(table.rows.size()) + " rows)");
  }
  Point point;
  for (const auto& [var, col] : config.column_map) {
    auto index = table.ColumnIndex(col);
    if (!index || *index >= table.rows[row].size()) {
      Fail(ErrorCode::kMissingColumn, "row " + std::to_string(row + 1) + ": column '" + col +
                                          "' (variable " + var + ") is missing");
    }
    point.Set(var, table.rows[row][*index]);
  }
  return point;
}

}  // namespace derivkey
