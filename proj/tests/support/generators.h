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

// Seeded random inputs for the property suites.

#ifndef DERIVKEY_TESTS_SUPPORT_GENERATORS_H_
#define DERIVKEY_TESTS_SUPPORT_GENERATORS_H_

#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include "derivkey/linalg.h"
#include "derivkey/polynomial.h"

namespace derivkey::testing {

using Rng = std::mt19937_64;

double Uniform(Rng& rng, double lo, double hi);
int UniformInt(Rng& rng, int lo, int hi);

// Up to `max_terms` terms of total degree <= max_degree with coefficients
// p/q, |p| <= 20, 1 <= q <= 6.
Polynomial RandomPolynomial(Rng& rng, std::size_t arity, std::uint32_t max_degree,
                            std::size_t max_terms);

// Variables x1..xn, functions f1..fm.
VectorField RandomField(Rng& rng, std::size_t n, std::size_t m, std::uint32_t max_degree,
                        std::size_t max_terms);

// Every f_j contains c * x_i^degree for each variable, plus random
// lower-order terms; integer coefficients in [-5, 5].
VectorField RandomDenseField(Rng& rng, std::size_t n, std::size_t m, std::uint32_t degree);

// Hadamard ratio det(G) / prod G_ii of G = A^T A, where the rows of A are
// the Hessian rows d/dx (d f_j / d x_i) at `x` over every (f_j, x_i). It is
// in [0, 1] and near 0 when the first-partial map cannot pin down x.
double IdentifiabilityAt(const VectorField& field, std::span<const double> x);

// RandomDenseField redrawn until IdentifiabilityAt(field, x) > 1e-6.
VectorField RandomIdentifiableField(Rng& rng, std::size_t n, std::size_t m,
                                    std::uint32_t degree, std::span<const double> x);

Matrix RandomMatrix(Rng& rng, std::size_t n, double lo, double hi);

std::vector<double> RandomVector(Rng& rng, std::size_t n, double lo, double hi);

std::vector<std::uint8_t> RandomBytes(Rng& rng, std::size_t n);

}  // namespace derivkey::testing

#endif  // DERIVKEY_TESTS_SUPPORT_GENERATORS_H_
