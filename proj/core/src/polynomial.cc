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

#include <algorithm>
#include <charconv>
#include <cmath>
#include <set>

#include "derivkey/error.h"
#include "text_util.h"

namespace derivkey {

std::uint32_t Monomial::Degree() const {
  std::uint32_t d = 0;
  for (std::uint32_t e : exponents) d += e;
  return d;
}

bool GradedLexBefore(std::span<const std::uint32_t> a,
                     std::span<const std::uint32_t> b) {
  std::uint64_t da = 0, db = 0;
  for (auto e : a) da += e;
  for (auto e : b) db += e;
  if (da != db) return da > db;
  return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

Polynomial Polynomial::FromTerms(std::size_t arity, std::vector<Monomial> terms) {
  for (const auto& t : terms) {
    if (t.exponents.size() != arity) {
      Fail(ErrorCode::kArityMismatch,
           "monomial has " + std::to_string(t.exponents.size()) +
               " exponents, expected " + std::to_string(arity));
    }
  }
  std::sort(terms.begin(), terms.end(), [](const Monomial& a, const Monomial& b) {
    return GradedLexBefore(a.exponents, b.exponents);
  });
  Polynomial p(arity);
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().exponents == t.exponents) {
      p.terms_.back().coefficient += t.coefficient;
    } else {
      p.terms_.push_back(std::move(t));
    }
  }
  std::erase_if(p.terms_, [](const Monomial& m) { return m.coefficient.is_zero(); });
  return p;
}

Polynomial Polynomial::Constant(std::size_t arity, Rational value) {
  return FromTerms(arity, {Monomial{value, std::vector<std::uint32_t>(arity, 0)}});
}

Polynomial Polynomial::Variable(std::size_t arity, std::size_t index,
                                std::uint32_t power) {
  if (index >= arity) {
    Fail(ErrorCode::kUnknownVariable, "variable index out of range");
  }
  std::vector<std::uint32_t> exps(arity, 0);
  exps[index] = power;
  return FromTerms(arity, {Monomial{Rational(1), std::move(exps)}});
}

std::uint32_t Polynomial::TotalDegree() const {
  // Graded order puts the highest degree first.
  return terms_.empty() ? 0 : terms_.front().Degree();
}

Polynomial Polynomial::operator-() const { return Scaled(Rational(-1)); }

Polynomial Polynomial::Scaled(const Rational& factor) const {
  std::vector<Monomial> out = terms_;
  for (auto& t : out) t.coefficient *= factor;
  return FromTerms(arity_, std::move(out));
}

static void CheckSameArity(const Polynomial& a, const Polynomial& b) {
  if (a.arity() != b.arity()) {
    Fail(ErrorCode::kArityMismatch, "polynomials over different variable sets");
  }
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  CheckSameArity(a, b);
  std::vector<Monomial> terms = a.terms_;
  terms.insert(terms.end(), b.terms_.begin(), b.terms_.end());
  return Polynomial::FromTerms(a.arity_, std::move(terms));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  CheckSameArity(a, b);
  std::vector<Monomial> terms;
  terms.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& ta : a.terms_) {
    for (const auto& tb : b.terms_) {
      Monomial m{ta.coefficient * tb.coefficient, ta.exponents};
      for (std::size_t i = 0; i < m.exponents.size(); ++i) {
        std::uint64_t e = std::uint64_t{m.exponents[i]} + tb.exponents[i];
        if (e > 0xffffffffu) Fail(ErrorCode::kOverflow, "exponent overflow");
        m.exponents[i] = static_cast<std::uint32_t>(e);
      }
      terms.push_back(std::move(m));
    }
  }
  return Polynomial::FromTerms(a.arity_, std::move(terms));
}

double Evaluate(const Polynomial& poly, std::span<const double> values) {
  if (values.size() != poly.arity()) {
    Fail(ErrorCode::kArityMismatch,
         "point has " + std::to_string(values.size()) + " coordinates, polynomial has " +
             std::to_string(poly.arity()) + " variables");
  }
  double sum = 0.0;
  for (const auto& term : poly.terms()) {
    double product = term.coefficient.ToDouble();
    for (std::size_t i = 0; i < values.size(); ++i) {
      for (std::uint32_t k = 0; k < term.exponents[i]; ++k) product *= values[i];
    }
    sum += product;
  }
  return sum;
}

Polynomial PartialDerivative(const Polynomial& poly, std::size_t index) {
  if (index >= poly.arity()) {
    Fail(ErrorCode::kUnknownVariable,
         "variable index " + std::to_string(index) + " out of range");
  }
  std::vector<Monomial> out;
  for (const auto& term : poly.terms()) {
    std::uint32_t e = term.exponents[index];
    if (e == 0) continue;
    Monomial m{term.coefficient * Rational(static_cast<std::int64_t>(e)), term.exponents};
    m.exponents[index] = e - 1;
    out.push_back(std::move(m));
  }
  return Polynomial::FromTerms(poly.arity(), std::move(out));
}

std::string CanonicalText(const Polynomial& poly,
                          std::span<const std::string> variable_names) {
  if (variable_names.size() != poly.arity()) {
    Fail(ErrorCode::kArityMismatch, "variable name count does not match arity");
  }
  if (poly.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& term : poly.terms()) {
    Rational c = term.coefficient;
    bool negative = c.num() < 0;
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    Rational magnitude = negative ? -c : c;

    std::string factors;
    for (std::size_t i = 0; i < term.exponents.size(); ++i) {
      std::uint32_t e = term.exponents[i];
      if (e == 0) continue;
      if (!factors.empty()) factors += "*";
      factors += variable_names[i];
      if (e > 1) factors += "^" + std::to_string(e);
    }
    if (factors.empty()) {
      out += magnitude.ToString();
    } else if (magnitude == Rational(1)) {
      out += factors;
    } else {
      out += magnitude.ToString() + "*" + factors;
    }
  }
  return out;
}

std::optional<double> Point::Get(std::string_view name) const {
  auto it = values_.find(std::string(name));
  if (it == values_.end()) return std::nullopt;
  return it->second;
}

Point Point::Parse(std::string_view text) {
  Point point;
  for (std::string_view item : internal::Split(text, ',')) {
    item = internal::Trim(item);
    if (item.empty()) continue;
    auto eq = item.find('=');
    if (eq == std::string_view::npos) {
      Fail(ErrorCode::kSyntax, "point entry '" + std::string(item) + "' lacks '='");
    }
    std::string name(internal::Trim(item.substr(0, eq)));
    std::string_view value_text = internal::Trim(item.substr(eq + 1));
    auto value = internal::ParseDouble(value_text);
    if (name.empty() || !value) {
      Fail(ErrorCode::kSyntax, "malformed point entry '" + std::string(item) + "'");
    }
    if (point.values_.count(name) != 0) {
      Fail(ErrorCode::kDuplicateName, "point assigns '" + name + "' twice");
    }
    point.values_[name] = *value;
  }
  return point;
}

VectorField::VectorField(std::vector<std::string> variables,
                         std::vector<NamedPolynomial> functions)
    : variables_(std::move(variables)), functions_(std::move(functions)) {
  std::set<std::string> seen;
  for (const auto& v : variables_) {
    if (!seen.insert(v).second) {
      Fail(ErrorCode::kDuplicateName, "duplicate variable '" + v + "'");
    }
  }
  for (const auto& [name, poly] : functions_) {
    if (!seen.insert(name).second) {
      Fail(ErrorCode::kDuplicateName, "duplicate name '" + name + "'");
    }
    if (poly.arity() != variables_.size()) {
      Fail(ErrorCode::kArityMismatch, "function '" + name + "' has wrong arity");
    }
  }
}

std::size_t VectorField::VariableIndex(std::string_view name) const {
  auto it = std::find(variables_.begin(), variables_.end(), name);
  if (it == variables_.end()) {
    Fail(ErrorCode::kUnknownVariable, "unknown variable '" + std::string(name) + "'");
  }
  return static_cast<std::size_t>(it - variables_.begin());
}

std::size_t VectorField::FunctionIndex(std::string_view name) const {
  for (std::size_t i = 0; i < functions_.size(); ++i) {
    if (functions_[i].first == name) return i;
  }
  Fail(ErrorCode::kUnknownName, "unknown function '" + std::string(name) + "'");
}

const Polynomial& VectorField::Function(std::string_view name) const {
  return functions_[FunctionIndex(name)].second;
}

std::vector<double> VectorField::Coordinates(const Point& point) const {
  std::vector<double> coords;
  coords.reserve(variables_.size());
  for (const auto& v : variables_) {
    auto value = point.Get(v);
    if (!value) Fail(ErrorCode::kArityMismatch, "point lacks variable '" + v + "'");
    if (!std::isfinite(*value)) {
      Fail(ErrorCode::kArityMismatch, "point value for '" + v + "' is not finite");
    }
    coords.push_back(*value);
  }
  if (point.values().size() != variables_.size()) {
    for (const auto& [name, value] : point.values()) {
      if (std::find(variables_.begin(), variables_.end(), name) == variables_.end()) {
        Fail(ErrorCode::kArityMismatch, "point defines undeclared variable '" + name + "'");
      }
    }
  }
  return coords;
}

Point VectorField::MakePoint(std::span<const double> coordinates) const {
  if (coordinates.size() != variables_.size()) {
    Fail(ErrorCode::kArityMismatch, "coordinate count does not match variable count");
  }
  Point p;
  for (std::size_t i = 0; i < coordinates.size(); ++i) p.Set(variables_[i], coordinates[i]);
  return p;
}

}  // namespace derivkey
