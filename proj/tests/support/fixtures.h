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

// The university graduation data set shared by unit and acceptance tests.

#ifndef DERIVKEY_TESTS_SUPPORT_FIXTURES_H_
#define DERIVKEY_TESTS_SUPPORT_FIXTURES_H_

#include <array>
#include <string>

#include "derivkey/linalg.h"
#include "derivkey/polynomial.h"

namespace derivkey::testing {

inline std::string DataPath(const std::string& name) {
  return std::string(DERIVKEY_TEST_DATA_DIR) + "/" + name;
}

inline const char kUniversityFunctions[] =
    "vars: x1 x2 x3 x4 x5\n"
    "f1 = x1^2 + 2*x1*x2 + 4*x3*x4 + 5\n"
    "f2 = x2^2 + 4*x2*x3 + 6*x1*x5 + 10\n"
    "f3 = x3^2 + 2*x1*x4 + 5*x2*x5 + 4\n";

// Girls, Boys, Total, Placements, Pass rate of the 2011 graduation year.
inline Point Point2011() {
  return Point({{"x1", 300.0}, {"x2", 1500.0}, {"x3", 1800.0}, {"x4", 1600.0}, {"x5", 0.97}});
}

// d f_j / d x_i over {f1,f2,f3} x {x1,x2,x3}, variable-major.
inline constexpr std::array<double, 9> kPublishedDerivatives = {
    3600, 5.82, 3200, 600, 10200, 4.85, 6400, 6000, 3600};

// The 3x3 block as listed with one row per variable.
inline Matrix ReferenceBlock() {
  return Matrix::FromRows({{3600, 5.82, 3200}, {600, 10200, 4.85}, {6400, 6000, 3600}});
}

inline constexpr std::array<double, 3> kReportedEigenvalues = {10610, -810, 7600};
inline constexpr std::int64_t kReportedKey = 10610;

}  // namespace derivkey::testing

#endif  // DERIVKEY_TESTS_SUPPORT_FIXTURES_H_
