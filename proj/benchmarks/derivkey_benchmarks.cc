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


#include <benchmark/benchmark.h>

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "derivkey/calculus.h"
#include "derivkey/funcfile.h"
#include "derivkey/keying.h"
#include "derivkey/linalg.h"
#include "derivkey/perturb.h"

namespace {

using derivkey::Matrix;

const char kSystem[] =
    "vars: x1 x2 x3 x4 x5\n"
    "f1 = x1^2 + 2*x1*x2 + 4*x3*x4 + 5\n"
    "f2 = x2^2 + 4*x2*x3 + 6*x1*x5 + 10\n"
    "f3 = x3^2 + 2*x1*x4 + 5*x2*x5 + 4\n";

void BM_XorTransform(benchmark::State& state) {
  std::vector<std::uint8_t> data(static_cast<std::size_t>(state.range(0)), 0x5a);
  const derivkey::KeyScalar key{10610, 1};
  for (auto _ : state) {
    derivkey::XorTransformInPlace(data, key);
    benchmark::DoNotOptimize(data.data());
  }
  state.SetBytesProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_XorTransform)->RangeMultiplier(2)->Range(1 << 16, 4 << 20);

void BM_Eigenvalues(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> dist(-1e3, 1e3);
  Matrix m(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) m(r, c) = dist(rng);
  }
  for (auto _ : state) benchmark::DoNotOptimize(derivkey::Eigenvalues(m));
}
BENCHMARK(BM_Eigenvalues)->Arg(3)->Arg(8)->Arg(16)->Arg(64);

void BM_ParseFunctionFile(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(derivkey::ParseFunctionFile(kSystem));
}
BENCHMARK(BM_ParseFunctionFile);

void BM_JacobianAt(benchmark::State& state) {
  auto field = derivkey::ParseFunctionFile(kSystem);
  auto point = derivkey::Point::Parse("x1=300,x2=1500,x3=1800,x4=1600,x5=0.97");
  for (auto _ : state) benchmark::DoNotOptimize(derivkey::JacobianAt(field, point));
}
BENCHMARK(BM_JacobianAt);

void BM_ReconstructAffine(benchmark::State& state) {
  auto field = derivkey::ParseFunctionFile(kSystem);
  auto schedule = derivkey::Schedule::AllFirstPartials(field);
  auto record = derivkey::PerturbPoint(
      field, derivkey::Point::Parse("x1=300,x2=1500,x3=1800,x4=1600,x5=0.97"), schedule);
  for (auto _ : state) {
    benchmark::DoNotOptimize(derivkey::ReconstructAffine(field, schedule, record));
  }
}
BENCHMARK(BM_ReconstructAffine);

}  // namespace

BENCHMARK_MAIN();
