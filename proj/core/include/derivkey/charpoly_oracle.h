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

// Independent spectrum route for small matrices, used to cross-check
// Eigenvalues(). Shares no code with the QR path.

#ifndef DERIVKEY_CHARPOLY_ORACLE_H_
#define DERIVKEY_CHARPOLY_ORACLE_H_

#include <vector>

#include "derivkey/linalg.h"

namespace derivkey {

inline constexpr std::size_t kMaxOracleDimension = 4;

// Monic characteristic polynomial det(lambda*I - A) via the
// Faddeev-LeVerrier recursion. Returned highest degree first:
// {1, c_{n-1}, ..., c_0}.
std::vector<double> CharacteristicPolynomial(const Matrix& m);

// Durand-Kerner simultaneous iteration on a monic polynomial given highest
// degree first. Throws kNoConvergence if the relative residual
// |p(z)| / sum_k |c_k||z|^k stays above 1e-10 for some root.
EigenSet DurandKernerRoots(const std::vector<double>& monic);

// Throws kNotSquare, kDimensionTooLarge (n > 4).
EigenSet CharPolyRootsOracle(const Matrix& m);

}  // namespace derivkey

#endif  // DERIVKEY_CHARPOLY_ORACLE_H_
