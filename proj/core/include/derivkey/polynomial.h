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

// Multivariate polynomials with exact rational coefficients, the named
// polynomial systems built from them, and evaluation points.
//
// A Polynomial is always canonical: no zero coefficients, no repeated
// exponent vectors, and terms sorted in graded-lex order (higher total degree
// first, ties broken by the lexicographically larger exponent vector, with
// variables compared in declaration order). Two polynomials are equal iff
// their term lists are equal.

#ifndef DERIVKEY_POLYNOMIAL_H_
#define DERIVKEY_POLYNOMIAL_H_

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "derivkey/rational.h"

namespace derivkey {

struct Monomial {
  Rational coefficient;
  std::vector<std::uint32_t> exponents;

  std::uint32_t Degree() const;
  friend bool operator==(const Monomial&, const Monomial&) = default;
};

// True when `a` precedes `b` in graded-lex order.
bool GradedLexBefore(std::span<const std::uint32_t> a,
                     std::span<const std::uint32_t> b);

class Polynomial {
 public:
  // The zero polynomial over `arity` variables.
  explicit Polynomial(std::size_t arity = 0) : arity_(arity) {}

  // Merges like terms, drops zeros and sorts. Every exponent vector must
  // have length `arity`.
  static Polynomial FromTerms(std::size_t arity, std::vector<Monomial> terms);
  static Polynomial Constant(std::size_t arity, Rational value);
  static Polynomial Variable(std::size_t arity, std::size_t index,
                             std::uint32_t power = 1);

  std::size_t arity() const { return arity_; }
  const std::vector<Monomial>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::uint32_t TotalDegree() const;

  Polynomial operator-() const;
  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  Polynomial Scaled(const Rational& factor) const;

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  std::size_t arity_;
  std::vector<Monomial> terms_;
};

// Term-sum evaluation. Throws kArityMismatch if values.size() != arity.
double Evaluate(const Polynomial& poly, std::span<const double> values);

// Exact symbolic derivative with respect to variable `index`.
// Throws kUnknownVariable if index >= arity.
Polynomial PartialDerivative(const Polynomial& poly, std::size_t index);

// "x1^2 + 2*x1*x2 + 5"; the zero polynomial prints as "0".
std::string CanonicalText(const Polynomial& poly,
                          std::span<const std::string> variable_names);

// An assignment of real values to named variables.
class Point {
 public:
  Point() = default;
  explicit Point(std::map<std::string, double> values)
      : values_(std::move(values)) {}

  void Set(const std::string& name, double value) { values_[name] = value; }
  std::optional<double> Get(std::string_view name) const;
  const std::map<std::string, double>& values() const { return values_; }

  // Parses "x1=300,x2=1500". Throws kSyntax on malformed input.
  static Point Parse(std::string_view text);

  friend bool operator==(const Point&, const Point&) = default;

 private:
  std::map<std::string, double> values_;
};

// F = (f1..fm) over the named variables x1..xn.
class VectorField {
 public:
  using NamedPolynomial = std::pair<std::string, Polynomial>;

  VectorField() = default;
  // Throws kDuplicateName or kArityMismatch on invalid input.
  VectorField(std::vector<std::string> variables,
              std::vector<NamedPolynomial> functions);

  const std::vector<std::string>& variables() const { return variables_; }
  const std::vector<NamedPolynomial>& functions() const { return functions_; }
  std::size_t variable_count() const { return variables_.size(); }
  std::size_t function_count() const { return functions_.size(); }

  // Throw kUnknownVariable / kUnknownName respectively.
  std::size_t VariableIndex(std::string_view name) const;
  std::size_t FunctionIndex(std::string_view name) const;
  const Polynomial& Function(std::string_view name) const;

  // Coordinates of `point` in declaration order. Throws kArityMismatch if
  // the point has gaps, extra names, or non-finite values.
  std::vector<double> Coordinates(const Point& point) const;
  Point MakePoint(std::span<const double> coordinates) const;

  friend bool operator==(const VectorField&, const VectorField&) = default;

 private:
  std::vector<std::string> variables_;
  std::vector<NamedPolynomial> functions_;
};

}  // namespace derivkey

#endif  // DERIVKEY_POLYNOMIAL_H_
