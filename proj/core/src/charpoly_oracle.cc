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

#include "derivkey/charpoly_oracle.h"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>

#include "derivkey/error.h"

namespace derivkey {

std::vector<double> CharacteristicPolynomial(const Matrix& m) {
  if (!m.is_square()) Fail(ErrorCode::kNotSquare, "characteristic polynomial needs a square matrix");
  const std::size_t n = m.rows();
  std::vector<double> coef(n + 1, 0.0);
  coef[0] = 1.0;

  // mk holds M_k; M_0 = 0.
  std::vector<long double> mk(n * n, 0.0L);
  std::vector<long double> next(n * n);
  for (std::size_t k = 1; k <= n; ++k) {
    // M_k = A * M_{k-1} + c_{n-k+1} I
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        long double s = 0.0L;
        for (std::size_t t = 0; t < n; ++t) s += static_cast<long double>(m(i, t)) * mk[t * n + j];
        if (i == j) s += coef[k - 1];
        next[i * n + j] = s;
      }
    }
    mk.swap(next);
    long double trace = 0.0L;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t t = 0; t < n; ++t) trace += static_cast<long double>(m(i, t)) * mk[t * n + i];
    }
    coef[k] = static_cast<double>(-trace / static_cast<long double>(k));
  }
  return coef;
}

EigenSet DurandKernerRoots(const std::vector<double>& monic) {
  using C = std::complex<long double>;
  if (monic.empty() || monic[0] != 1.0) {
    Fail(ErrorCode::kInvalidArgument, "Durand-Kerner expects a monic polynomial");
  }
  const std::size_t degree = monic.size() - 1;
  if (degree == 0) return {};

  auto eval = [&](C z) {
    C acc = 0;
    for (double c : monic) acc = acc * z + static_cast<long double>(c);
    return acc;
  };
  auto magnitude = [&](C z) {
    long double acc = 0, az = std::abs(z);
    for (double c : monic) acc = acc * az + std::abs(static_cast<long double>(c));
    return acc;
  };

  // Fujiwara-style radius so the start circle encloses every root.
  long double radius = 0;
  for (std::size_t k = 1; k <= degree; ++k) {
    radius = std::max(radius, std::pow(std::abs(static_cast<long double>(monic[k])),
                                       1.0L / static_cast<long double>(k)));
  }
  radius = 2 * radius + 1;

  std::vector<C> z(degree);
  for (std::size_t k = 0; k < degree; ++k) {
    long double angle = 2 * std::numbers::pi_v<long double> * k / degree + 0.4L;
    z[k] = std::polar(radius, angle);
  }

  for (int iter = 0; iter < 5000; ++iter) {
    long double worst = 0;
    for (std::size_t i = 0; i < degree; ++i) {
      C denom = 1;
      for (std::size_t j = 0; j < degree; ++j) {
        if (j != i) denom *= (z[i] - z[j]);
      }
      if (denom == C(0)) denom = C(1e-30L, 0);
      C delta = eval(z[i]) / denom;
      z[i] -= delta;
      worst = std::max(worst, std::abs(delta) / (1 + std::abs(z[i])));
    }
    if (worst < 1e-18L) break;
  }

  EigenSet roots;
  for (const C& root : z) {
    long double rel = std::abs(eval(root)) / magnitude(root);
    if (!(rel <= 1e-10L)) {
      Fail(ErrorCode::kNoConvergence, "Durand-Kerner residual above 1e-10");
    }
    roots.emplace_back(static_cast<double>(root.real()), static_cast<double>(root.imag()));
  }
  SortCanonical(roots);
  return roots;
}

EigenSet CharPolyRootsOracle(const Matrix& m) {
  if (!m.is_square()) Fail(ErrorCode::kNotSquare, "oracle needs a square matrix");
  if (m.rows() > kMaxOracleDimension) {
    Fail(ErrorCode::kDimensionTooLarge, "oracle supports dimension <= 4");
  }
  return DurandKernerRoots(CharacteristicPolynomial(m));
}

}  // namespace derivkey
