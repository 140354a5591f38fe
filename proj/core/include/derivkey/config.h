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

// Dataset configuration, one `key = value` per line:
//
//   function_file = university.pvf
//   schedule_file = university_schedule.csv
//   column.x1 = Girls
//   percent.x5 = true
//   policy = max-abs-real          # min-real | index:<k> | seeded:<seed>
//   key_scale = 1
//   imag_tol = 1e-9
//   submatrix_vars = x1,x2,x3

#ifndef DERIVKEY_CONFIG_H_
#define DERIVKEY_CONFIG_H_

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "derivkey/keying.h"
#include "derivkey/polynomial.h"

namespace derivkey {

struct DatasetConfig {
  std::string function_file;
  std::string schedule_file;
  // variable -> CSV column name
  std::map<std::string, std::string> column_map;
  // variables whose CSV cells are percentages (divided by 100 on load)
  std::set<std::string> percent_columns;
  SelectionPolicy policy = policy::MaxAbsReal{};
  std::int64_t key_scale = kDefaultKeyScale;
  double imag_tol = kDefaultImagTolerance;
  std::vector<std::string> submatrix_vars;

  // Checks the cross-field invariants against `field`; throws kInvalidConfig.
  void Validate(const VectorField& field) const;
};

// Relative file paths are resolved against `base_dir` when it is non-empty.
// Throws kInvalidConfig.
DatasetConfig ParseConfig(std::string_view text, const std::string& base_dir = "");
DatasetConfig LoadConfigFile(const std::string& path);

}  // namespace derivkey

#endif  // DERIVKEY_CONFIG_H_
