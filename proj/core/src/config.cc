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

#include "derivkey/config.h"

#include <algorithm>
#include <charconv>
#include <filesystem>

#include "derivkey/error.h"
#include "derivkey/io.h"
#include "text_util.h"

namespace derivkey {
namespace {

[[noreturn]] void Bad(std::size_t line, const std::string& message) {
  Fail(ErrorCode::kInvalidConfig, "config line " + std::to_string(line) + ": " + message);
}

std::string Resolve(const std::string& base_dir, std::string_view path) {
  std::filesystem::path p(path);
  if (base_dir.empty() || p.is_absolute()) return p.string();
  return (std::filesystem::path(base_dir) / p).lexically_normal().string();
}

}  // namespace

DatasetConfig ParseConfig(std::string_view text, const std::string& base_dir) {
  DatasetConfig cfg;
  std::set<std::string> seen;
  std::size_t line_no = 0;
  for (std::string_view line : internal::Lines(text)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = internal::Trim(line);
    if (line.empty()) continue;
    auto eq = line.find('=');
    if (eq == std::string_view::npos) Bad(line_no, "expected 'key = value'");
    std::string key(internal::Trim(line.substr(0, eq)));
    std::string_view value = internal::Trim(line.substr(eq + 1));
    if (!seen.insert(key).second) Bad(line_no, "key '" + key + "' given twice");

    if (key == "function_file") {
      cfg.function_file = Resolve(base_dir, value);
    } else if (key == "schedule_file") {
      cfg.schedule_file = Resolve(base_dir, value);
    } else if (key.starts_with("column.")) {
      if (value.empty()) Bad(line_no, "empty column name for " + key);
      cfg.column_map[key.substr(7)] = std::string(value);
    } else if (key.starts_with("percent.")) {
      if (value == "true") {
        cfg.percent_columns.insert(key.substr(8));
      } else if (value != "false") {
        Bad(line_no, key + " must be true or false");
      }
    } else if (key == "policy") {
      try {
        cfg.policy = ParseSelectionPolicy(value);
      } catch (const Error& e) {
        Bad(line_no, e.what());
      }
    } else if (key == "key_scale") {
      std::int64_t scale = 0;
      auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), scale);
      if (ec != std::errc() || ptr != value.data() + value.size() || scale <= 0) {
        Bad(line_no, "key_scale must be a positive integer");
      }
      cfg.key_scale = scale;
    } else if (key == "imag_tol") {
      auto v = internal::ParseDouble(value);
      if (!v || *v < 0) Bad(line_no, "imag_tol must be a non-negative number");
      cfg.imag_tol = *v;
    } else if (key == "submatrix_vars") {
      for (auto item : internal::Split(value, ',')) {
        item = internal::Trim(item);
        if (item.empty()) Bad(line_no, "empty name in submatrix_vars");
        cfg.submatrix_vars.emplace_back(item);
      }
    } else {
      Bad(line_no, "unknown key '" + key + "'");
    }
  }
  return cfg;
}

DatasetConfig LoadConfigFile(const std::string& path) {
  std::string text = ReadFile(path);
  return ParseConfig(text, std::filesystem::path(path).parent_path().string());
}

void DatasetConfig::Validate(const VectorField& field) const {
  for (const auto& v : field.variables()) {
    if (column_map.count(v) == 0) {
      Fail(ErrorCode::kInvalidConfig, "no column.<var> mapping for variable '" + v + "'");
    }
  }
  for (const auto& [v, col] : column_map) {
    if (std::find(field.variables().begin(), field.variables().end(), v) ==
        field.variables().end()) {
      Fail(ErrorCode::kInvalidConfig, "column mapping for undeclared variable '" + v + "'");
    }
  }
  for (const auto& v : percent_columns) {
    if (column_map.count(v) == 0) {
      Fail(ErrorCode::kInvalidConfig, "percent flag on undeclared variable '" + v + "'");
    }
  }
  if (submatrix_vars.size() != field.function_count()) {
    Fail(ErrorCode::kInvalidConfig,
         "submatrix_vars lists " + std::to_string(submatrix_vars.size()) +
             " variables but the system has " + std::to_string(field.function_count()) +
             " functions");
  }
  for (const auto& v : submatrix_vars) {
    if (column_map.count(v) == 0) {
      Fail(ErrorCode::kInvalidConfig, "submatrix variable '" + v + "' is not declared");
    }
  }
}

}  // namespace derivkey
