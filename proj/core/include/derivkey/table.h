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

#ifndef DERIVKEY_TABLE_H_
#define DERIVKEY_TABLE_H_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "derivkey/config.h"
#include "derivkey/polynomial.h"

namespace derivkey {

// Numeric table after percent normalization. Holds only the columns named by
// the configuration's column map, in header order.
struct TableDocument {
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;

  std::optional<std::size_t> ColumnIndex(std::string_view name) const;
};

// Minimal RFC 4180 field splitting (double quotes, "" escapes).
std::vector<std::string> SplitCsvLine(std::string_view line);

// Throws kMissingColumn, kNonNumericCell (1-based data row and column name)
// or kEmptyTable when there are no data rows.
TableDocument LoadTable(std::string_view csv_text, const DatasetConfig& config);

// Inverse of LoadTable: percent columns are written back as percentages such
// that reloading reproduces every value bit for bit.
std::string WriteTableCsv(const TableDocument& table, const DatasetConfig& config);

// Point for data row `row` (0-based). Throws kMissingColumn naming the 1-based
// row and the column when a mapped column is absent.
Point RowPoint(const TableDocument& table, std::size_t row, const DatasetConfig& config);

}  // namespace derivkey

#endif  // DERIVKEY_TABLE_H_
