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

#include <cmath>

#include <gtest/gtest.h>

#include "derivkey/error.h"
#include "fixtures.h"
#include "oracles.h"

namespace derivkey {
namespace {

TEST(CharPolyTest, ReferenceBlockTrace) {
  auto coeffs = CharacteristicPolynomial(testing::ReferenceBlock());
  ASSERT_EQ(coeffs.size(), 4u);
  EXPECT_EQ(coeffs[0], 1.0);
  EXPECT_EQ(coeffs[1], -17400.0);
  // Constant term of det(lambda I - A) for n = 3 is -det(A).
  double det = testing::CofactorDeterminant(testing::ReferenceBlock());
  EXPECT_NEAR(coeffs[3], -det, 1e-9 * std::abs(det));
}

TEST(CharPolyTest, IdentityRoots) {
  EigenSet roots = CharPolyRootsOracle(Matrix::Identity(2));
  ASSERT_EQ(roots.size(), 2u);
  for (const auto& r : roots) EXPECT_NEAR(std::abs(r - Complex(1, 0)), 0, 1e-6);
}

TEST(CharPolyTest, CompanionMatrix) {
  // lambda^2 - 5 lambda + 6
  Matrix companion = Matrix::FromRows({{0, -6}, {1, 5}});
  EigenSet roots = CharPolyRootsOracle(companion);
  ASSERT_EQ(roots.size(), 2u);
  EXPECT_NEAR(roots[0].real(), 3, 1e-9);
  EXPECT_NEAR(roots[1].real(), 2, 1e-9);
  EXPECT_NEAR(roots[0].imag(), 0, 1e-9);
}

TEST(CharPolyTest, DurandKernerComplexRoots) {
  EigenSet roots = DurandKernerRoots({1, 0, 1});
  ASSERT_EQ(roots.size(), 2u);
  EXPECT_NEAR(std::abs(roots[0] - Complex(0, 1)), 0, 1e-9);
  EXPECT_NEAR(std::abs(roots[1] - Complex(0, -1)), 0, 1e-9);
}

TEST(CharPolyTest, DimensionLimit) {
  EXPECT_THROW(CharPolyRootsOracle(Matrix::Identity(5)), Error);
  EXPECT_THROW(CharPolyRootsOracle(Matrix(2, 3)), Error);
}

}  // namespace
}  // namespace derivkey
