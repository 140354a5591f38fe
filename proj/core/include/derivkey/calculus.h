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

#ifndef DERIVKEY_CALCULUS_H_
#define DERIVKEY_CALCULUS_H_

#include <string>
#include <vector>

#include "derivkey/linalg.h"
#include "derivkey/polynomial.h"

namespace derivkey {

// A matrix whose rows and columns carry names. Jacobians are oriented rows =
// functions, columns = variables, so entry (j, i) is d f_j / d x_i.
class LabeledMatrix {
 public:
  // Throws kDimensionMismatch or kDuplicateName.
  LabeledMatrix(std::vector<std::string> row_labels, std::vector<std::string> col_labels,
                Matrix data);

  const std::vector<std::string>& row_labels() const { return row_labels_; }
  const std::vector<std::string>& col_labels() const { return col_labels_; }
  const Matrix& data() const { return data_; }

  double At(std::string_view row, std::string_view col) const;
  LabeledMatrix Transposed() const;

 private:
  std::vector<std::string> row_labels_;
  std::vector<std::string> col_labels_;
  Matrix data_;
};

// Header row ",c1,c2,..." then one "label,v1,v2,..." line per row.
std::string FormatLabeledMatrixCsv(const LabeledMatrix& m);

LabeledMatrix JacobianAt(const VectorField& field, const Point& point);

// Keeps the requested columns in the requested order. Throws kWrongCount
// unless exactly row-count distinct columns are named, kUnknownVariable for
// names that are not columns.
LabeledMatrix SelectSquareSubmatrix(const LabeledMatrix& jacobian,
                                    const std::vector<std::string>& variables);

struct InvertibilityCheck {
  bool invertible = false;
  double determinant = 0.0;
};

inline constexpr double kDefaultDeterminantTolerance = 1e-12;

// invertible <=> |det| > tol * prod_i ||row_i||_inf.
InvertibilityCheck IftInvertibilityCheck(const LabeledMatrix& square,
                                         double tol = kDefaultDeterminantTolerance);

// n x n matrix of second partials, exactly symmetric.
Matrix HessianAt(const Polynomial& poly, std::span<const double> coordinates);

}  // namespace derivkey

#endif  // DERIVKEY_CALCULUS_H_
