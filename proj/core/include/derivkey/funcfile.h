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

// Reader and writer for polynomial function files (.pvf).
//
//   # comment
//   vars: x1 x2 x3 x4 x5
//   f1 = x1^2 + 2*x1*x2 + 4*x3*x4 + 5
//   f2 = (x1 + 1)*(x1 - 1)
//
// One statement per line. Operators are + - * ^ and parentheses; numbers
// are integers, fractions "p/q" or dotted decimals. A leading minus is only
// accepted at the head of an expression, "^" only on a variable and only
// with a positive integer exponent, and multiplication must be written
// with an explicit "*".

#ifndef DERIVKEY_FUNCFILE_H_
#define DERIVKEY_FUNCFILE_H_

#include <string>
#include <string_view>

#include "derivkey/polynomial.h"

namespace derivkey {

// Throws Error with kSyntax, kUnknownVariable, kNonIntegerExponent,
// kDivisionUnsupported or kDuplicateName. Messages carry "line L, column C".
VectorField ParseFunctionFile(std::string_view text);

// Canonical text of the whole system; ParseFunctionFile(FormatFunctionFile(f))
// == f for every canonical field.
std::string FormatFunctionFile(const VectorField& field);

}  // namespace derivkey

#endif  // DERIVKEY_FUNCFILE_H_
