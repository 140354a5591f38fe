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


// Acceptance suite. Prints one PASS or FAIL line per criterion and exits
// non-zero when any criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "derivkey/calculus.h"
#include "derivkey/charpoly_oracle.h"
#include "derivkey/config.h"
#include "derivkey/error.h"
#include "derivkey/funcfile.h"
#include "derivkey/io.h"
#include "derivkey/keying.h"
#include "derivkey/linalg.h"
#include "derivkey/perturb.h"
#include "derivkey/pipeline.h"
#include "derivkey/table.h"
#include "fixtures.h"
#include "generators.h"
#include "oracles.h"

namespace derivkey::acceptance {
namespace {

using testing::DataPath;
using testing::Rng;
using Clock = std::chrono::steady_clock;

struct Outcome {
  bool ok = true;
  std::ostringstream detail;

  void Require(bool condition, const std::string& what) {
    if (!condition) {
      ok = false;
      detail << "[failed: " << what << "] ";
    }
  }
};

double Seconds(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

double RelErr(double got, double want) { return std::abs(got - want) / std::abs(want); }

double MaxAbsDiff(const std::vector<double>& a, const std::vector<double>& b) {
  double d = 0;
  for (std::size_t i = 0; i < a.size(); ++i) d = std::max(d, std::abs(a[i] - b[i]));
  return d;
}

struct University {
  DatasetConfig config = LoadConfigFile(DataPath("university.cfg"));
  VectorField field = ParseFunctionFile(ReadFile(config.function_file));
  Schedule schedule = Schedule::Parse(ReadFile(config.schedule_file));
  TableDocument table = LoadTable(ReadFile(DataPath("university_graduation.csv")), config);
};

// Derivative values of the published system at the 2011 point.
void DerivativeFixture(Outcome& o) {
  const auto start = Clock::now();
  University u;
  Point point = RowPoint(u.table, 3, u.config);
  PerturbedRecord rec = PerturbPoint(u.field, point, u.schedule);
  auto values = rec.Values();
  o.Require(values.size() == 9, "nine values");
  double worst = 0;
  for (std::size_t k = 0; k < values.size() && k < 9; ++k) {
    worst = std::max(worst, RelErr(values[k], testing::kPublishedDerivatives[k]));
  }
  const double elapsed = Seconds(start);
  o.Require(worst <= 1e-12, "relative error <= 1e-12");
  o.Require(elapsed < 1.0, "runtime < 1 s");
  o.detail << "max relative error " << worst << ", " << elapsed << " s";
}

// Spectrum of the published 3x3 block.
void EigenvalueFixture(Outcome& o) {
  const auto start = Clock::now();
  Matrix m = ParseMatrixCsv(ReadFile(DataPath("university_jacobian_block.csv")));
  EigenSet values = Eigenvalues(m);
  o.Require(values.size() == 3, "three eigenvalues");
  EigenSet reported;
  for (double v : testing::kReportedEigenvalues) reported.push_back(Complex(v, 0));
  double worst = 0;
  Complex sum = 0, product = 1;
  for (const auto& v : values) {
    sum += v;
    product *= v;
    double best = INFINITY;
    for (const auto& r : reported) best = std::min(best, std::abs(v - r) / std::abs(r));
    worst = std::max(worst, best);
  }
  const double det = testing::CofactorDeterminant(m);
  const double sum_err = std::abs(sum - Complex(17400, 0)) / 17400;
  const double product_err = std::abs(product - Complex(det, 0)) / std::abs(det);
  const double elapsed = Seconds(start);
  o.Require(worst <= 1e-3, "each eigenvalue within 1e-3 relative");
  o.Require(sum_err <= 1e-9, "sum equals 17400 within 1e-9 relative");
  o.Require(product_err <= 1e-6, "product equals determinant within 1e-6 relative");
  o.Require(elapsed < 1.0, "runtime < 1 s");
  o.detail << "eigenvalues";
  for (const auto& v : values) o.detail << " " << FormatComplex(v);
  o.detail << "; max relative error " << worst << ", sum error " << sum_err
           << ", product error " << product_err << ", " << elapsed << " s";
}

void KeyFixture(Outcome& o) {
  University u;
  KeygenReport report = RunKeygen(u.config, u.field, RowPoint(u.table, 3, u.config));
  o.Require(report.key.value == testing::kReportedKey && report.key.scale == 1,
            "key value 10610 at scale 1");
  o.detail << "key " << report.key.ToString() << " from eigenvalue " << report.lambda;
}

void EndToEnd(Outcome& o) {
  University u;
  const std::string message = ReadFile(DataPath("university_message.txt"));
  const auto dir = std::filesystem::temp_directory_path() / "derivkey_acceptance_pipeline";
  std::filesystem::remove_all(dir);
  PipelineReport report = RunPipeline(u.config, u.field, u.schedule, u.table, 4,
                                      std::vector<std::uint8_t>(message.begin(), message.end()),
                                      dir.string());
  const std::string ciphertext = ReadFile((dir / "ciphertext.bin").string());
  const std::string decrypted = ReadFile((dir / "decrypted.bin").string());
  o.Require(decrypted == message, "decrypted bytes identical to the message");
  o.Require(ciphertext.size() == message.size(), "ciphertext length equals plaintext length");
  o.Require(ciphertext != message, "ciphertext differs from plaintext");
  o.Require(report.key.value == testing::kReportedKey, "key 10610 logged");
  o.detail << message.size() << " bytes, key " << report.key.ToString();
  std::filesystem::remove_all(dir);
}

void Reconstruction(Outcome& o) {
  const auto start = Clock::now();
  University u;
  PerturbedRecord published;
  for (std::size_t k = 0; k < 9; ++k) {
    published.values.emplace_back(u.schedule.entries()[k].label,
                                  testing::kPublishedDerivatives[k]);
  }
  auto report = ReconstructAffine(u.field, u.schedule, published);
  const double fixture_err = MaxAbsDiff(u.field.Coordinates(report.point),
                                        u.field.Coordinates(testing::Point2011()));
  o.Require(fixture_err <= 1e-9, "published values invert within 1e-9");

  Rng rng(20260501);
  double affine_worst = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const auto n = static_cast<std::size_t>(testing::UniformInt(rng, 3, 5));
    const auto m = static_cast<std::size_t>(testing::UniformInt(rng, 1, 3));
    auto truth = testing::RandomVector(rng, n, -1e3, 1e3);
    VectorField field = testing::RandomIdentifiableField(rng, n, m, 2, truth);
    Schedule schedule = Schedule::AllFirstPartials(field);
    auto rec = PerturbPoint(field, field.MakePoint(truth), schedule);
    auto got = field.Coordinates(ReconstructAffine(field, schedule, rec).point);
    affine_worst = std::max(affine_worst, MaxAbsDiff(got, truth));
  }
  o.Require(affine_worst <= 1e-9, "100 affine round trips within 1e-9");

  double newton_worst = 0;
  for (int trial = 0; trial < 50; ++trial) {
    auto truth = testing::RandomVector(rng, 3, -1e3, 1e3);
    VectorField field = testing::RandomIdentifiableField(rng, 3, 3, 3, truth);
    Schedule schedule = Schedule::AllFirstPartials(field);
    auto start_point = truth;
    for (auto& v : start_point) v += testing::Uniform(rng, -0.1, 0.1);
    auto rec = PerturbPoint(field, field.MakePoint(truth), schedule);
    auto got = field.Coordinates(
        ReconstructNewton(field, schedule, rec, field.MakePoint(start_point)).point);
    newton_worst = std::max(newton_worst, MaxAbsDiff(got, truth));
  }
  o.Require(newton_worst <= 1e-6, "50 Newton round trips within 1e-6");
  const double elapsed = Seconds(start);
  o.Require(elapsed < 10.0, "runtime < 10 s");
  o.detail << "fixture error " << fixture_err << ", affine worst " << affine_worst
           << ", Newton worst " << newton_worst << " (absolute), " << elapsed << " s";
}

double MedianEncryptSeconds(std::size_t bytes, const KeyScalar& key, int runs) {
  Rng rng(bytes);
  auto payload = testing::RandomBytes(rng, bytes);
  std::vector<double> times;
  XorTransformInPlace(payload, key);
  for (int r = 0; r < runs; ++r) {
    const auto start = Clock::now();
    auto out = XorTransform(payload, key);
    times.push_back(Seconds(start));
    if (out.size() != bytes) return -1;
  }
  std::sort(times.begin(), times.end());
  return times[times.size() / 2];
}

void LinearScaling(Outcome& o) {
  const KeyScalar key{testing::kReportedKey, 1};
  const double one = MedianEncryptSeconds(1 << 20, key, 5);
  const double two = MedianEncryptSeconds(2 << 20, key, 5);
  const double ratio = two / one;
  o.Require(ratio >= 1.5 && ratio <= 3.0, "2 MiB / 1 MiB time ratio in [1.5, 3.0]");
  o.detail << "1 MiB " << one * 1e3 << " ms, 2 MiB " << two * 1e3 << " ms, ratio " << ratio;
}

void PropertySuites(Outcome& o) {
  Rng rng(7);

  int round_trip_failures = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const auto n = static_cast<std::size_t>(testing::UniformInt(rng, 1, 5));
    const auto m = static_cast<std::size_t>(testing::UniformInt(rng, 1, 3));
    VectorField field = testing::RandomField(rng, n, m, 4, 6);
    if (!(ParseFunctionFile(FormatFunctionFile(field)) == field)) ++round_trip_failures;
  }
  o.Require(round_trip_failures == 0, "parse/print round trip");

  int fd_failures = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const auto n = static_cast<std::size_t>(testing::UniformInt(rng, 1, 5));
    Polynomial p = testing::RandomPolynomial(rng, n, 4, 8);
    auto x = testing::RandomVector(rng, n, -10, 10);
    for (std::size_t i = 0; i < n; ++i) {
      const double symbolic = Evaluate(PartialDerivative(p, i), x);
      const double numeric = testing::CentralDifference(p, x, i, 1e-5);
      if (std::abs(symbolic - numeric) > 1e-4 * (1 + std::abs(symbolic))) ++fd_failures;
    }
  }
  o.Require(fd_failures == 0, "finite difference vs symbolic derivative");

  int gershgorin_failures = 0, transpose_failures = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const auto n = static_cast<std::size_t>(testing::UniformInt(rng, 1, 6));
    Matrix m = testing::RandomMatrix(rng, n, -1e3, 1e3);
    EigenSet values = Eigenvalues(m);
    for (const auto& v : values) {
      if (!testing::InGershgorinDiscs(m, v, 1e-9)) ++gershgorin_failures;
    }
    EigenSet t = Eigenvalues(m.Transposed());
    if (testing::OptimalMatchingDistance(values, t) >
        1e-9 * (1 + testing::SpectralRadius(values))) {
      ++transpose_failures;
    }
  }
  o.Require(gershgorin_failures == 0, "Gershgorin containment");
  o.Require(transpose_failures == 0, "transpose spectrum invariance");

  int oracle_failures = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const auto n = static_cast<std::size_t>(testing::UniformInt(rng, 1, 4));
    Matrix m = testing::RandomMatrix(rng, n, -1e3, 1e3);
    EigenSet values = Eigenvalues(m);
    if (testing::OptimalMatchingDistance(values, CharPolyRootsOracle(m)) >
        1e-6 * (1 + testing::SpectralRadius(values))) {
      ++oracle_failures;
    }
  }
  o.Require(oracle_failures == 0, "eigen oracle agreement");

  int cipher_failures = 0;
  for (int trial = 0; trial < 100; ++trial) {
    auto payload = testing::RandomBytes(rng, static_cast<std::size_t>(testing::UniformInt(rng, 0, 65536)));
    std::int64_t value = 0;
    while (value == 0) value = static_cast<std::int64_t>(rng());
    KeyScalar key{value, 1000};
    auto once = XorTransform(payload, key);
    if (once.size() != payload.size() || XorTransform(once, key) != payload) ++cipher_failures;
  }
  o.Require(cipher_failures == 0, "cipher involution and length preservation");

  int det_failures = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const auto n = static_cast<std::size_t>(testing::UniformInt(rng, 1, 5));
    Matrix m = testing::RandomMatrix(rng, n, -1e3, 1e3);
    if (RelErr(Determinant(m), testing::CofactorDeterminant(m)) > 1e-9) ++det_failures;
  }
  o.Require(det_failures == 0, "determinant vs cofactor expansion");

  o.detail << "round trip 200, finite difference 100, Gershgorin/transpose 200, oracle 100, "
              "cipher 100, determinant 200 cases";
}

bool Report(const char* id, const char* title, const std::function<void(Outcome&)>& check) {
  Outcome o;
  try {
    check(o);
  } catch (const std::exception& e) {
    o.ok = false;
    o.detail << "[exception: " << e.what() << "]";
  }
  std::printf("%s %s: %s -- %s\n", id, o.ok ? "PASS" : "FAIL", title, o.detail.str().c_str());
  return o.ok;
}

}  // namespace
}  // namespace derivkey::acceptance

int main() {
  using namespace derivkey::acceptance;
  bool ok = true;
  ok &= Report("AC1", "derivative fixture", DerivativeFixture);
  ok &= Report("AC2", "eigenvalue fixture", EigenvalueFixture);
  ok &= Report("AC3", "key fixture", KeyFixture);
  ok &= Report("AC4", "end-to-end encryption round trip", EndToEnd);
  ok &= Report("AC5", "reconstruction", Reconstruction);
  ok &= Report("AC6", "linear scaling of encryption time", LinearScaling);
  ok &= Report("AC7", "property suites", PropertySuites);
  return ok ? 0 : 1;
}
