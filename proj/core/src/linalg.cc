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

#include "derivkey/linalg.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <utility>

#include "derivkey/error.h"
#include "derivkey/io.h"
#include "text_util.h"

namespace derivkey {

Matrix::Matrix(std::size_t rows, std::size_t cols)
    : Matrix(rows, cols, std::vector<double>(rows * cols, 0.0)) {}

Matrix::Matrix(std::size_t rows, std::size_t cols, std::vector<double> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (rows == 0 || cols == 0) {
    Fail(ErrorCode::kInvalidArgument, "matrix dimensions must be positive");
  }
  if (entries_.size() != rows * cols) {
    Fail(ErrorCode::kInvalidArgument, "matrix entry count does not match dimensions");
  }
  for (double v : entries_) {
    if (!std::isfinite(v)) Fail(ErrorCode::kInvalidArgument, "matrix entries must be finite");
  }
}

Matrix Matrix::FromRows(std::initializer_list<std::initializer_list<double>> rows) {
  std::vector<std::vector<double>> copy;
  for (const auto& r : rows) copy.emplace_back(r);
  return FromRows(copy);
}

Matrix Matrix::FromRows(const std::vector<std::vector<double>>& rows) {
  if (rows.empty()) Fail(ErrorCode::kInvalidArgument, "matrix needs at least one row");
  std::size_t cols = rows.front().size();
  std::vector<double> entries;
  entries.reserve(rows.size() * cols);
  for (const auto& r : rows) {
    if (r.size() != cols) Fail(ErrorCode::kDimensionMismatch, "ragged matrix rows");
    entries.insert(entries.end(), r.begin(), r.end());
  }
  return Matrix(rows.size(), cols, std::move(entries));
}

Matrix Matrix::Identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

Matrix Matrix::Transposed() const {
  Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  }
  return t;
}

double Matrix::Trace() const {
  double t = 0.0;
  for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
  return t;
}

double Matrix::RowInfNorm(std::size_t r) const {
  double s = 0.0;
  for (double v : Row(r)) s += std::abs(v);
  return s;
}

double Matrix::InfNorm() const {
  double best = 0.0;
  for (std::size_t r = 0; r < rows_; ++r) best = std::max(best, RowInfNorm(r));
  return best;
}

void SortCanonical(EigenSet& values) {
  std::sort(values.begin(), values.end(), [](const Complex& a, const Complex& b) {
    if (a.real() != b.real()) return a.real() > b.real();
    return a.imag() > b.imag();
  });
}

namespace {

void RequireSquare(const Matrix& m, const char* what) {
  if (!m.is_square()) {
    Fail(ErrorCode::kNotSquare, std::string(what) + " requires a square matrix, got " +
                                    std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
  }
}

// In-place LU with partial pivoting on a square matrix. Returns false when a
// pivot is <= threshold; `sign` receives the permutation parity.
struct LuResult {
  Matrix lu;
  std::vector<std::size_t> perm;
  int sign = 1;
};

LuResult Factor(const Matrix& a, double pivot_threshold) {
  const std::size_t n = a.rows();
  LuResult r{a, std::vector<std::size_t>(n), 1};
  std::iota(r.perm.begin(), r.perm.end(), 0);
  Matrix& lu = r.lu;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    for (std::size_t i = k + 1; i < n; ++i) {
      if (std::abs(lu(i, k)) > std::abs(lu(p, k))) p = i;
    }
    if (std::abs(lu(p, k)) <= pivot_threshold) {
      Fail(ErrorCode::kSingularSystem,
           "matrix is singular to working precision (pivot " + std::to_string(k) + ")");
    }
    if (p != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(lu(p, j), lu(k, j));
      std::swap(r.perm[p], r.perm[k]);
      r.sign = -r.sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      double f = lu(i, k) / lu(k, k);
      lu(i, k) = f;
      for (std::size_t j = k + 1; j < n; ++j) lu(i, j) -= f * lu(k, j);
    }
  }
  return r;
}

std::vector<double> LuSolve(const LuResult& f, std::span<const double> b) {
  const std::size_t n = f.lu.rows();
  std::vector<double> x(n);
  for (std::size_t i = 0; i < n; ++i) {
    double s = b[f.perm[i]];
    for (std::size_t j = 0; j < i; ++j) s -= f.lu(i, j) * x[j];
    x[i] = s;
  }
  for (std::size_t i = n; i-- > 0;) {
    double s = x[i];
    for (std::size_t j = i + 1; j < n; ++j) s -= f.lu(i, j) * x[j];
    x[i] = s / f.lu(i, i);
  }
  return x;
}

std::vector<double> Residual(const Matrix& a, std::span<const double> x,
                             std::span<const double> b) {
  std::vector<double> r(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    double s = 0.0;
    for (std::size_t j = 0; j < a.cols(); ++j) s += a(i, j) * x[j];
    r[i] = b[i] - s;
  }
  return r;
}

double Norm2(std::span<const double> v) {
  double s = 0.0;
  for (double x : v) s += x * x;
  return std::sqrt(s);
}

}  // namespace

double Determinant(const Matrix& m) {
  RequireSquare(m, "determinant");
  const std::size_t n = m.rows();
  Matrix lu = m;
  double det = 1.0;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    for (std::size_t i = k + 1; i < n; ++i) {
      if (std::abs(lu(i, k)) > std::abs(lu(p, k))) p = i;
    }
    if (std::abs(lu(p, k)) < 1e-300) return 0.0;
    if (p != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(lu(p, j), lu(k, j));
      det = -det;
    }
    det *= lu(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      double f = lu(i, k) / lu(k, k);
      for (std::size_t j = k + 1; j < n; ++j) lu(i, j) -= f * lu(k, j);
    }
  }
  return det;
}

LinearSolution SolveLinear(const Matrix& a, std::span<const double> b) {
  if (b.size() != a.rows()) {
    Fail(ErrorCode::kDimensionMismatch, "right-hand side has " + std::to_string(b.size()) +
                                            " entries, matrix has " +
                                            std::to_string(a.rows()) + " rows");
  }
  if (a.rows() < a.cols()) {
    Fail(ErrorCode::kDimensionMismatch, "underdetermined system (" + std::to_string(a.rows()) +
                                            " equations, " + std::to_string(a.cols()) +
                                            " unknowns)");
  }

  LinearSolution out;
  if (a.is_square()) {
    auto f = Factor(a, 1e-12 * a.InfNorm());
    out.x = LuSolve(f, b);
    out.residual_norm = Norm2(Residual(a, out.x, b));
    out.consistent = true;
    return out;
  }

  const std::size_t n = a.cols();
  Matrix normal(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      double s = 0.0;
      for (std::size_t k = 0; k < a.rows(); ++k) s += a(k, i) * a(k, j);
      normal(i, j) = s;
    }
  }
  auto project = [&](std::span<const double> v) {
    std::vector<double> atv(n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t k = 0; k < a.rows(); ++k) atv[i] += a(k, i) * v[k];
    }
    return atv;
  };
  auto f = Factor(normal, 1e-12 * normal.InfNorm());
  out.x = LuSolve(f, project(b));
  auto correction = LuSolve(f, project(Residual(a, out.x, b)));
  for (std::size_t i = 0; i < n; ++i) out.x[i] += correction[i];
  out.residual_norm = Norm2(Residual(a, out.x, b));
  out.consistent = out.residual_norm <= 1e-8 * (1.0 + Norm2(b));
  return out;
}

namespace {

// Householder similarity reduction to upper Hessenberg form.
void ReduceToHessenberg(std::vector<std::vector<double>>& h) {
  const int n = static_cast<int>(h.size());
  std::vector<double> ort(n, 0.0);
  for (int m = 1; m <= n - 2; ++m) {
    double scale = 0.0;
    for (int i = m; i < n; ++i) scale += std::abs(h[i][m - 1]);
    if (scale == 0.0) continue;

    double norm_sq = 0.0;
    for (int i = n - 1; i >= m; --i) {
      ort[i] = h[i][m - 1] / scale;
      norm_sq += ort[i] * ort[i];
    }
    double g = std::sqrt(norm_sq);
    if (ort[m] > 0) g = -g;
    norm_sq -= ort[m] * g;
    ort[m] -= g;

    for (int j = m; j < n; ++j) {
      double f = 0.0;
      for (int i = n - 1; i >= m; --i) f += ort[i] * h[i][j];
      f /= norm_sq;
      for (int i = m; i < n; ++i) h[i][j] -= f * ort[i];
    }
    for (int i = 0; i < n; ++i) {
      double f = 0.0;
      for (int j = n - 1; j >= m; --j) f += ort[j] * h[i][j];
      f /= norm_sq;
      for (int j = m; j < n; ++j) h[i][j] -= f * ort[j];
    }
    h[m][m - 1] = scale * g;
    for (int i = m + 1; i < n; ++i) h[i][m - 1] = 0.0;
  }
}

// Francis double-shift QR on an upper Hessenberg matrix. Each double step
// uses the two eigenvalues of the trailing 2x2 block of the active window as
// shifts; the window shrinks as sub-diagonal entries become negligible.
EigenSet HessenbergQr(std::vector<std::vector<double>>& h) {
  const int size = static_cast<int>(h.size());
  const double eps = std::numeric_limits<double>::epsilon();
  const int budget = 40 * size;
  std::vector<double> re(size, 0.0), im(size, 0.0);

  double norm = 0.0;
  for (int i = 0; i < size; ++i) {
    for (int j = std::max(i - 1, 0); j < size; ++j) norm += std::abs(h[i][j]);
  }
  if (norm == 0.0) return EigenSet(size, Complex(0.0, 0.0));

  int n = size - 1;
  int iter = 0;
  int total = 0;
  double exshift = 0.0;
  double p = 0, q = 0, r = 0, s = 0, z = 0, t, w, x, y;

  while (n >= 0) {
    int l = n;
    while (l > 0) {
      s = std::abs(h[l - 1][l - 1]) + std::abs(h[l][l]);
      if (s == 0.0) s = norm;
      if (std::abs(h[l][l - 1]) <= eps * s) break;
      --l;
    }

    if (l == n) {
      re[n] = h[n][n] + exshift;
      im[n] = 0.0;
      --n;
      iter = 0;
    } else if (l == n - 1) {
      w = h[n][n - 1] * h[n - 1][n];
      p = (h[n - 1][n - 1] - h[n][n]) / 2.0;
      q = p * p + w;
      z = std::sqrt(std::abs(q));
      x = h[n][n] + exshift;
      if (q >= 0) {
        z = (p >= 0) ? p + z : p - z;
        re[n - 1] = x + z;
        re[n] = re[n - 1];
        if (z != 0.0) re[n] = x - w / z;
        im[n - 1] = 0.0;
        im[n] = 0.0;
      } else {
        re[n - 1] = x + p;
        re[n] = x + p;
        im[n - 1] = z;
        im[n] = -z;
      }
      n -= 2;
      iter = 0;
    } else {
      x = h[n][n];
      y = h[n - 1][n - 1];
      w = h[n][n - 1] * h[n - 1][n];

      // Exceptional shifts break cycles that ordinary shifts fall into.
      if (iter == 10) {
        exshift += x;
        for (int i = 0; i <= n; ++i) h[i][i] -= x;
        s = std::abs(h[n][n - 1]) + std::abs(h[n - 1][n - 2]);
        x = y = 0.75 * s;
        w = -0.4375 * s * s;
      }
      if (iter == 30) {
        s = (y - x) / 2.0;
        s = s * s + w;
        if (s > 0) {
          s = std::sqrt(s);
          if (y < x) s = -s;
          s = x - w / ((y - x) / 2.0 + s);
          for (int i = 0; i <= n; ++i) h[i][i] -= s;
          exshift += s;
          x = y = w = 0.964;
        }
      }

      ++iter;
      if (++total > budget) {
        Fail(ErrorCode::kNoConvergence,
             "QR iteration did not converge within " + std::to_string(budget) + " iterations");
      }

      // Look for two consecutive small sub-diagonal elements.
      int m = n - 2;
      while (m >= l) {
        z = h[m][m];
        r = x - z;
        s = y - z;
        p = (r * s - w) / h[m + 1][m] + h[m][m + 1];
        q = h[m + 1][m + 1] - z - r - s;
        r = h[m + 2][m + 1];
        s = std::abs(p) + std::abs(q) + std::abs(r);
        p /= s;
        q /= s;
        r /= s;
        if (m == l) break;
        if (std::abs(h[m][m - 1]) * (std::abs(q) + std::abs(r)) <
            eps * (std::abs(p) * (std::abs(h[m - 1][m - 1]) + std::abs(z) +
                                  std::abs(h[m + 1][m + 1])))) {
          break;
        }
        --m;
      }
      for (int i = m + 2; i <= n; ++i) {
        h[i][i - 2] = 0.0;
        if (i > m + 2) h[i][i - 3] = 0.0;
      }

      // Double QR step on rows l..n and columns m..n.
      for (int k = m; k <= n - 1; ++k) {
        const bool notlast = (k != n - 1);
        if (k != m) {
          p = h[k][k - 1];
          q = h[k + 1][k - 1];
          r = notlast ? h[k + 2][k - 1] : 0.0;
          x = std::abs(p) + std::abs(q) + std::abs(r);
          if (x == 0.0) continue;
          p /= x;
          q /= x;
          r /= x;
        }
        s = std::sqrt(p * p + q * q + r * r);
        if (p < 0) s = -s;
        if (s == 0.0) continue;
        if (k != m) {
          h[k][k - 1] = -s * x;
        } else if (l != m) {
          h[k][k - 1] = -h[k][k - 1];
        }
        p += s;
        x = p / s;
        y = q / s;
        z = r / s;
        q /= p;
        r /= p;

        for (int j = k; j < size; ++j) {
          t = h[k][j] + q * h[k + 1][j];
          if (notlast) {
            t += r * h[k + 2][j];
            h[k + 2][j] -= t * z;
          }
          h[k][j] -= t * x;
          h[k + 1][j] -= t * y;
        }
        for (int i = 0; i <= std::min(n, k + 3); ++i) {
          t = x * h[i][k] + y * h[i][k + 1];
          if (notlast) {
            t += z * h[i][k + 2];
            h[i][k + 2] -= t * r;
          }
          h[i][k] -= t;
          h[i][k + 1] -= t * q;
        }
      }
    }
  }

  EigenSet out(size);
  for (int i = 0; i < size; ++i) out[i] = Complex(re[i], im[i]);
  return out;
}

}  // namespace

EigenSet Eigenvalues(const Matrix& m) {
  RequireSquare(m, "eigenvalues");
  if (m.rows() > kMaxEigenDimension) {
    Fail(ErrorCode::kDimensionTooLarge,
         "eigenvalue dimension " + std::to_string(m.rows()) + " exceeds " +
             std::to_string(kMaxEigenDimension));
  }
  const std::size_t n = m.rows();
  std::vector<std::vector<double>> h(n, std::vector<double>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) h[i][j] = m(i, j);
  }
  ReduceToHessenberg(h);
  EigenSet values = HessenbergQr(h);
  SortCanonical(values);
  return values;
}

Matrix ParseMatrixCsv(std::string_view text) {
  std::vector<std::vector<double>> rows;
  std::size_t line_no = 0;
  for (std::string_view line : internal::Lines(text)) {
    ++line_no;
    if (internal::Trim(line).empty()) continue;
    std::vector<double> row;
    for (std::string_view cell : internal::Split(line, ',')) {
      auto v = internal::ParseDouble(internal::Trim(cell));
      if (!v) {
        Fail(ErrorCode::kSyntax, "matrix line " + std::to_string(line_no) + ": '" +
                                     std::string(internal::Trim(cell)) + "' is not a number");
      }
      row.push_back(*v);
    }
    rows.push_back(std::move(row));
  }
  if (rows.empty()) Fail(ErrorCode::kSyntax, "matrix file is empty");
  return Matrix::FromRows(rows);
}

std::string FormatComplex(const Complex& c) {
  if (c.imag() == 0.0) return FormatDouble(c.real());
  std::string out = FormatDouble(c.real());
  out += c.imag() < 0 ? "-" : "+";
  out += FormatDouble(std::abs(c.imag())) + "i";
  return out;
}

std::string FormatMatrixCsv(const Matrix& m) {
  std::string out;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (c > 0) out += ",";
      out += FormatDouble(m(r, c));
    }
    out += "\n";
  }
  return out;
}

}  // namespace derivkey
