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

#include "derivkey/polynomial.h"

#include <cmath>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "derivkey/error.h"
#include "derivkey/funcfile.h"
#include "fixtures.h"
#include "generators.h"
#include "oracles.h"

namespace derivkey {
namespace {

using testing::Rng;

const std::vector<std::string> kXY = {"x1", "x2"};

Polynomial X(std::size_t arity, std::size_t i, std::uint32_t p = 1) {
  return Polynomial::Variable(arity, i, p);
}

TEST(PolynomialTest, CanonicalFormMergesAndOrders) {
  Polynomial p = Polynomial::Constant(2, 5) + X(2, 0) * X(2, 1).Scaled(2) + X(2, 0, 2);
  EXPECT_EQ(CanonicalText(p, kXY), "x1^2 + 2*x1*x2 + 5");
  EXPECT_EQ(p.TotalDegree(), 2u);
  Polynomial zero = X(2, 0) - X(2, 0);
  EXPECT_TRUE(zero.is_zero());
  EXPECT_EQ(CanonicalText(zero, kXY), "0");
  EXPECT_EQ(CanonicalText(X(2, 1).Scaled(-3), kXY), "-3*x2");
  EXPECT_EQ(CanonicalText(X(2, 0).Scaled(Rational(1, 2)), kXY), "1/2*x1");
}

TEST(PolynomialTest, GradedLexOrder) {
  Polynomial p = X(2, 1, 2) + X(2, 0) + X(2, 0, 2) + X(2, 1) + X(2, 0) * X(2, 1);
  EXPECT_EQ(CanonicalText(p, kXY), "x1^2 + x1*x2 + x2^2 + x1 + x2");
}

TEST(PolynomialTest, EvaluateUniversityF1) {
  VectorField field = ParseFunctionFile(testing::kUniversityFunctions);
  auto x = field.Coordinates(testing::Point2011());
  EXPECT_EQ(Evaluate(field.Function("f1"), x), 12510005.0);
  EXPECT_EQ(testing::NaiveEvaluate(field.Function("f1"), x), 12510005.0);
}

TEST(PolynomialTest, EvaluateSimpleCases) {
  std::vector<double> x = {3.0, -2.0};
  EXPECT_EQ(Evaluate(Polynomial(2), x), 0.0);
  EXPECT_EQ(Evaluate(Polynomial::Constant(2, 5), x), 5.0);
  std::vector<double> short_x = {1.0};
  EXPECT_THROW(Evaluate(Polynomial(2), short_x), Error);
}

TEST(PolynomialTest, PartialDerivatives) {
  VectorField field = ParseFunctionFile(testing::kUniversityFunctions);
  const auto& names = field.variables();
  EXPECT_EQ(CanonicalText(PartialDerivative(field.Function("f1"), 0), names), "2*x1 + 2*x2");
  EXPECT_EQ(CanonicalText(PartialDerivative(field.Function("f2"), 0), names), "6*x5");
  EXPECT_TRUE(PartialDerivative(Polynomial::Constant(5, 7), 2).is_zero());
  EXPECT_THROW(PartialDerivative(Polynomial(2), 2), Error);
}

TEST(PointTest, ParseAndCoordinates) {
  Point p = Point::Parse("x1=300, x2=1500");
  EXPECT_EQ(p.Get("x1"), 300.0);
  EXPECT_EQ(p.Get("x2"), 1500.0);
  EXPECT_FALSE(p.Get("x3").has_value());
  EXPECT_THROW(Point::Parse("x1"), Error);
  EXPECT_THROW(Point::Parse("x1=abc"), Error);
}

TEST(VectorFieldTest, CoordinatesRequireExactCover) {
  VectorField field = ParseFunctionFile("vars: a b\nf = a*b\n");
  EXPECT_EQ(field.Coordinates(Point::Parse("a=1,b=2")), (std::vector<double>{1, 2}));
  EXPECT_THROW(field.Coordinates(Point::Parse("a=1")), Error);
  EXPECT_THROW(field.Coordinates(Point::Parse("a=1,b=2,c=3")), Error);
  Point inf;
  inf.Set("a", 1);
  inf.Set("b", INFINITY);
  EXPECT_THROW(field.Coordinates(inf), Error);
}

TEST(VectorFieldTest, RejectsDuplicates) {
  EXPECT_THROW(VectorField({"x", "x"}, {}), Error);
  std::vector<VectorField::NamedPolynomial> fs = {{"f", Polynomial(1)}, {"f", Polynomial(1)}};
  EXPECT_THROW(VectorField({"x"}, fs), Error);
  std::vector<VectorField::NamedPolynomial> wrong = {{"f", Polynomial(2)}};
  EXPECT_THROW(VectorField({"x"}, wrong), Error);
}

TEST(PolynomialPropertyTest, LinearityOfDifferentiation) {
  Rng rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = static_cast<std::size_t>(testing::UniformInt(rng, 1, 5));
    Polynomial p = testing::RandomPolynomial(rng, n, 4, 6);
    Polynomial q = testing::RandomPolynomial(rng, n, 4, 6);
    for (std::size_t i = 0; i < n; ++i) {
      EXPECT_EQ(PartialDerivative(p + q, i), PartialDerivative(p, i) + PartialDerivative(q, i));
    }
  }
}

TEST(PolynomialPropertyTest, FiniteDifferenceAgreement) {
  Rng rng(12);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = static_cast<std::size_t>(testing::UniformInt(rng, 1, 5));
    Polynomial p = testing::RandomPolynomial(rng, n, 4, 8);
    auto x = testing::RandomVector(rng, n, -10, 10);
    for (std::size_t i = 0; i < n; ++i) {
      double symbolic = Evaluate(PartialDerivative(p, i), x);
      double numeric = testing::CentralDifference(p, x, i, 1e-5);
      EXPECT_LE(std::abs(symbolic - numeric), 1e-4 * (1 + std::abs(symbolic)))
          << "trial " << trial << " variable " << i;
    }
  }
}

TEST(PolynomialPropertyTest, EvaluationMatchesNaiveOracle) {
  Rng rng(13);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = static_cast<std::size_t>(testing::UniformInt(rng, 1, 5));
    Polynomial p = testing::RandomPolynomial(rng, n, 4, 8);
    auto x = testing::RandomVector(rng, n, -10, 10);
    double got = Evaluate(p, x);
    double want = testing::NaiveEvaluate(p, x);
    // Relative to the term magnitudes so cancellation does not dominate.
    double scale = 0;
    for (const auto& t : p.terms()) {
      double m = std::abs(t.coefficient.ToDouble());
      for (std::size_t i = 0; i < n; ++i) m *= std::pow(std::abs(x[i]), t.exponents[i]);
      scale += m;
    }
    EXPECT_LE(std::abs(got - want), 1e-12 * std::max(1.0, scale)) << "trial " << trial;
  }
}

}  // namespace
}  // namespace derivkey
