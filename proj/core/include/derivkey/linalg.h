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

#ifndef DERIVKEY_LINALG_H_
#define DERIVKEY_LINALG_H_

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace derivkey {

// Dense row-major matrix of finite doubles.
class Matrix {
 public:
  Matrix() = default;
  // Zero-filled. Throws kInvalidArgument for a zero dimension.
  Matrix(std::size_t rows, std::size_t cols);
  // Throws kInvalidArgument on size mismatch or non-finite entries.
  Matrix(std::size_t rows, std::size_t cols, std::vector<double> entries);

  static Matrix FromRows(std::initializer_list<std::initializer_list<double>> rows);
  static Matrix FromRows(const std::vector<std::vector<double>>& rows);
  static Matrix Identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  double& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  double operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
  std::span<const double> entries() const { return entries_; }
  std::span<const double> Row(std::size_t r) const {
    return std::span<const double>(entries_).subspan(r * cols_, cols_);
  }

  Matrix Transposed() const;
  double Trace() const;
  // max_i sum_j |a_ij|
  double InfNorm() const;
  double RowInfNorm(std::size_t r) const;

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> entries_;
};

using Complex = std::complex<double>;

// Eigenvalue multiset in canonical order: descending real part, then
// descending imaginary part.
using EigenSet = std::vector<Complex>;

void SortCanonical(EigenSet& values);

inline constexpr std::size_t kMaxEigenDimension = 64;

// LU with partial pivoting. Returns exactly 0 when a pivot column is entirely
// below 1e-300 in magnitude. Throws kNotSquare.
double Determinant(const Matrix& m);

struct LinearSolution {
  std::vector<double> x;
  // ||a x - b||_2
  double residual_norm = 0.0;
  // Square systems are always consistent. Overdetermined systems are when
  // residual_norm <= 1e-8 * (1 + ||b||_2).
  bool consistent = true;
};

// Square: LU with partial pivoting. Overdetermined: least squares through the
// normal equations plus one step of iterative refinement.
// Throws kSingularSystem when a pivot falls below 1e-12 times the infinity
// norm of the factored matrix, kDimensionMismatch for shape problems.
LinearSolution SolveLinear(const Matrix& a, std::span<const double> b);

// Householder reduction to upper Hessenberg form followed by Francis
// double-shift QR with deflation. Throws kNotSquare, kDimensionTooLarge
// (n > 64) and kNoConvergence after 40 * n iterations.
EigenSet Eigenvalues(const Matrix& m);

// One row per line, comma separated, no header.
Matrix ParseMatrixCsv(std::string_view text);
std::string FormatMatrixCsv(const Matrix& m);

// "3.5", "0+1i", "2-0.5i"
std::string FormatComplex(const Complex& c);

}  // namespace derivkey

#endif  // DERIVKEY_LINALG_H_
