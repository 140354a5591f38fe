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

#include <cmath>

#include <gtest/gtest.h>

#include "derivkey/error.h"
#include "derivkey/funcfile.h"
#include "fixtures.h"
#include "generators.h"
#include "oracles.h"

namespace derivkey {
namespace {

using testing::Rng;

VectorField University() { return ParseFunctionFile(testing::kUniversityFunctions); }

TEST(JacobianTest, UniversityPoint) {
  LabeledMatrix j = JacobianAt(University(), testing::Point2011());
  EXPECT_EQ(j.row_labels(), (std::vector<std::string>{"f1", "f2", "f3"}));
  EXPECT_EQ(j.col_labels(), (std::vector<std::string>{"x1", "x2", "x3", "x4", "x5"}));
  const char* fs[] = {"f1", "f2", "f3"};
  const char* xs[] = {"x1", "x2", "x3"};
  std::size_t k = 0;
  for (const char* x : xs) {
    for (const char* f : fs) {
      double want = testing::kPublishedDerivatives[k++];
      EXPECT_NEAR(j.At(f, x), want, 1e-12 * std::abs(want)) << f << "/" << x;
    }
  }
  EXPECT_EQ(j.At("f1", "x4"), 7200.0);
  EXPECT_EQ(j.At("f1", "x5"), 0.0);
}

TEST(JacobianTest, ConstantFieldIsZero) {
  VectorField field = ParseFunctionFile("vars: a b\nf = 3\ng = -1/2\n");
  LabeledMatrix j = JacobianAt(field, Point::Parse("a=1,b=2"));
  EXPECT_EQ(j.data(), Matrix(2, 2));
}

TEST(JacobianTest, LabelLookupErrors) {
  LabeledMatrix j = JacobianAt(University(), testing::Point2011());
  EXPECT_THROW(j.At("f9", "x1"), Error);
  EXPECT_THROW(j.At("f1", "x9"), Error);
  EXPECT_THROW(LabeledMatrix({"a"}, {"b", "b"}, Matrix(1, 2)), Error);
  EXPECT_THROW(LabeledMatrix({"a"}, {"b"}, Matrix(1, 2)), Error);
}

TEST(SubmatrixTest, UniversityBlockIsTransposedReference) {
  LabeledMatrix j = JacobianAt(University(), testing::Point2011());
  LabeledMatrix sq = SelectSquareSubmatrix(j, {"x1", "x2", "x3"});
  Matrix ref = testing::ReferenceBlock();
  for (std::size_t r = 0; r < 3; ++r) {
    for (std::size_t c = 0; c < 3; ++c) {
      EXPECT_NEAR(sq.data()(r, c), ref(c, r), 1e-12 * std::abs(ref(c, r)));
    }
  }
  EXPECT_EQ(sq.Transposed().row_labels(), (std::vector<std::string>{"x1", "x2", "x3"}));
}

TEST(SubmatrixTest, SelectionRules) {
  LabeledMatrix sq({"f", "g"}, {"a", "b"}, Matrix::FromRows({{1, 2}, {3, 4}}));
  EXPECT_EQ(SelectSquareSubmatrix(sq, {"a", "b"}).data(), sq.data());
  EXPECT_EQ(SelectSquareSubmatrix(sq, {"b", "a"}).data(), Matrix::FromRows({{2, 1}, {4, 3}}));
  LabeledMatrix j = JacobianAt(University(), testing::Point2011());
  try {
    SelectSquareSubmatrix(j, {"x1", "x2"});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kWrongCount);
  }
  try {
    SelectSquareSubmatrix(j, {"x1", "x1", "x2"});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kWrongCount);
  }
  try {
    SelectSquareSubmatrix(j, {"x1", "x2", "x9"});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kUnknownVariable);
  }
}

TEST(InvertibilityTest, Cases) {
  LabeledMatrix ref({"a", "b", "c"}, {"p", "q", "r"}, testing::ReferenceBlock());
  auto check = IftInvertibilityCheck(ref);
  EXPECT_TRUE(check.invertible);
  double oracle = testing::CofactorDeterminant(testing::ReferenceBlock());
  EXPECT_NEAR(check.determinant, oracle, 1e-6 * std::abs(oracle));
  LabeledMatrix id({"a", "b", "c"}, {"p", "q", "r"}, Matrix::Identity(3));
  EXPECT_TRUE(IftInvertibilityCheck(id).invertible);
  EXPECT_EQ(IftInvertibilityCheck(id).determinant, 1.0);
  LabeledMatrix zero({"a", "b", "c"}, {"p", "q", "r"}, Matrix(3, 3));
  EXPECT_FALSE(IftInvertibilityCheck(zero).invertible);
  LabeledMatrix twin({"a", "b"}, {"p", "q"}, Matrix::FromRows({{1, 2}, {2, 4}}));
  EXPECT_FALSE(IftInvertibilityCheck(twin).invertible);
}

TEST(HessianTest, Cases) {
  VectorField field = University();
  std::vector<double> x = {1, 2, 3, 4, 5};
  Matrix h = HessianAt(field.Function("f1"), x);
  Matrix want(5, 5);
  want(0, 0) = 2;
  want(0, 1) = want(1, 0) = 2;
  want(2, 3) = want(3, 2) = 4;
  EXPECT_EQ(h, want);
  EXPECT_EQ(HessianAt(Polynomial::Constant(5, 9), x), Matrix(5, 5));
  std::vector<double> two = {2};
  EXPECT_EQ(HessianAt(Polynomial::Variable(1, 0, 3), two), Matrix::FromRows({{12}}));
  EXPECT_THROW(HessianAt(field.Function("f1"), two), Error);
}

TEST(CalculusPropertyTest, HessianIsExactlySymmetric) {
  Rng rng(41);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = static_cast<std::size_t>(testing::UniformInt(rng, 1, 5));
    Polynomial p = testing::RandomPolynomial(rng, n, 4, 8);
    Matrix h = HessianAt(p, testing::RandomVector(rng, n, -10, 10));
    EXPECT_EQ(h, h.Transposed());
  }
}

TEST(CalculusPropertyTest, LinearFieldJacobianIsPointIndependent) {
  Rng rng(42);
  for (int trial = 0; trial < 50; ++trial) {
    VectorField field = testing::RandomField(rng, 4, 3, 1, 5);
    auto a = field.MakePoint(testing::RandomVector(rng, 4, -100, 100));
    auto b = field.MakePoint(testing::RandomVector(rng, 4, -100, 100));
    EXPECT_EQ(JacobianAt(field, a).data(), JacobianAt(field, b).data());
  }
}

TEST(CalculusPropertyTest, ScalingAndTransposeOfSpectrum) {
  Rng rng(43);
  for (int trial = 0; trial < 50; ++trial) {
    VectorField field = testing::RandomDenseField(rng, 4, 3, 2);
    const std::int64_t c = testing::UniformInt(rng, 2, 7);
    std::vector<VectorField::NamedPolynomial> scaled;
    for (const auto& [name, p] : field.functions()) scaled.emplace_back(name, p.Scaled(c));
    VectorField field_c(field.variables(), scaled);
    Point pt = field.MakePoint(testing::RandomVector(rng, 4, -10, 10));
    std::vector<std::string> vars = {"x1", "x2", "x3"};
    LabeledMatrix sq = SelectSquareSubmatrix(JacobianAt(field, pt), vars);
    LabeledMatrix sq_c = SelectSquareSubmatrix(JacobianAt(field_c, pt), vars);
    for (std::size_t r = 0; r < 3; ++r) {
      for (std::size_t k = 0; k < 3; ++k) {
        EXPECT_NEAR(sq_c.data()(r, k), c * sq.data()(r, k), 1e-9 * std::abs(c * sq.data()(r, k)));
      }
    }
    EigenSet ev = Eigenvalues(sq.data());
    EigenSet ev_c = Eigenvalues(sq_c.data());
    EigenSet ev_t = Eigenvalues(sq.data().Transposed());
    EigenSet ev_scaled;
    for (const auto& v : ev) ev_scaled.push_back(static_cast<double>(c) * v);
    double radius = testing::SpectralRadius(ev_c);
    EXPECT_LE(testing::OptimalMatchingDistance(ev_c, ev_scaled), 1e-9 * (1 + radius));
    EXPECT_LE(testing::OptimalMatchingDistance(ev, ev_t), 1e-9 * (1 + testing::SpectralRadius(ev)));
  }
}

}  // namespace
}  // namespace derivkey
