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

#include "derivkey/calculus.h"

#include <algorithm>
#include <cmath>
#include <set>

#include "derivkey/error.h"
#include "derivkey/io.h"

namespace derivkey {
namespace {

void RequireDistinct(const std::vector<std::string>& labels, const char* axis) {
  std::set<std::string> seen;
  for (const auto& l : labels) {
    if (!seen.insert(l).second) {
      Fail(ErrorCode::kDuplicateName, std::string("duplicate ") + axis + " label '" + l + "'");
    }
  }
}

std::size_t IndexOf(const std::vector<std::string>& labels, std::string_view name,
                    ErrorCode code) {
  auto it = std::find(labels.begin(), labels.end(), name);
  if (it == labels.end()) Fail(code, "no label '" + std::string(name) + "'");
  return static_cast<std::size_t>(it - labels.begin());
}

}  // namespace

LabeledMatrix::LabeledMatrix(std::vector<std::string> row_labels,
                             std::vector<std::string> col_labels, Matrix data)
    : row_labels_(std::move(row_labels)),
      col_labels_(std::move(col_labels)),
      data_(std::move(data)) {
  if (row_labels_.size() != data_.rows() || col_labels_.size() != data_.cols()) {
    Fail(ErrorCode::kDimensionMismatch, "label counts do not match matrix dimensions");
  }
  RequireDistinct(row_labels_, "row");
  RequireDistinct(col_labels_, "column");
}

double LabeledMatrix::At(std::string_view row, std::string_view col) const {
  return data_(IndexOf(row_labels_, row, ErrorCode::kUnknownName),
               IndexOf(col_labels_, col, ErrorCode::kUnknownVariable));
}

LabeledMatrix LabeledMatrix::Transposed() const {
  return LabeledMatrix(col_labels_, row_labels_, data_.Transposed());
}

std::string FormatLabeledMatrixCsv(const LabeledMatrix& m) {
  std::string out = ",";
  for (std::size_t c = 0; c < m.col_labels().size(); ++c) {
    if (c > 0) out += ",";
    out += m.col_labels()[c];
  }
  out += "\n";
  for (std::size_t r = 0; r < m.row_labels().size(); ++r) {
    out += m.row_labels()[r];
    for (std::size_t c = 0; c < m.col_labels().size(); ++c) {
      out += "," + FormatDouble(m.data()(r, c));
    }
    out += "\n";
  }
  return out;
}

LabeledMatrix JacobianAt(const VectorField& field, const Point& point) {
  const auto coords = field.Coordinates(point);
  const std::size_t m = field.function_count();
  const std::size_t n = field.variable_count();
  Matrix data(m, n);
  std::vector<std::string> rows;
  for (std::size_t j = 0; j < m; ++j) {
    const auto& [name, poly] = field.functions()[j];
    rows.push_back(name);
    for (std::size_t i = 0; i < n; ++i) {
      data(j, i) = Evaluate(PartialDerivative(poly, i), coords);
    }
  }
  return LabeledMatrix(std::move(rows), field.variables(), std::move(data));
}

LabeledMatrix SelectSquareSubmatrix(const LabeledMatrix& jacobian,
                                    const std::vector<std::string>& variables) {
  const std::size_t m = jacobian.row_labels().size();
  if (variables.size() != m) {
    Fail(ErrorCode::kWrongCount, "square submatrix needs exactly " + std::to_string(m) +
                                     " variables, got " + std::to_string(variables.size()));
  }
  std::set<std::string> distinct(variables.begin(), variables.end());
  if (distinct.size() != variables.size()) {
    Fail(ErrorCode::kWrongCount, "submatrix variables must be distinct");
  }
  std::vector<std::size_t> cols;
  for (const auto& v : variables) {
    cols.push_back(IndexOf(jacobian.col_labels(), v, ErrorCode::kUnknownVariable));
  }
  Matrix data(m, m);
  for (std::size_t r = 0; r < m; ++r) {
    for (std::size_t c = 0; c < m; ++c) data(r, c) = jacobian.data()(r, cols[c]);
  }
  return LabeledMatrix(jacobian.row_labels(), variables, std::move(data));
}

InvertibilityCheck IftInvertibilityCheck(const LabeledMatrix& square, double tol) {
  const Matrix& a = square.data();
  if (!a.is_square()) Fail(ErrorCode::kNotSquare, "invertibility check needs a square matrix");
  InvertibilityCheck out;
  out.determinant = Determinant(a);
  double scale = 1.0;
  for (std::size_t r = 0; r < a.rows(); ++r) scale *= a.RowInfNorm(r);
  out.invertible = std::abs(out.determinant) > tol * scale;
  return out;
}

Matrix HessianAt(const Polynomial& poly, std::span<const double> coordinates) {
  if (coordinates.size() != poly.arity()) {
    Fail(ErrorCode::kArityMismatch, "point does not match polynomial arity");
  }
  const std::size_t n = poly.arity();
  Matrix h(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    Polynomial di = PartialDerivative(poly, i);
    for (std::size_t k = i; k < n; ++k) {
      double v = Evaluate(PartialDerivative(di, k), coordinates);
      h(i, k) = v;
      h(k, i) = v;
    }
  }
  return h;
}

}  // namespace derivkey
