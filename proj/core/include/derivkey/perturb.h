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

// Perturbation publishes first partial derivatives of the system at a
// sensitive point in place of the point itself. Reconstruction inverts the
// derivative map: by a linear solve when every scheduled derivative is affine
// (true for quadratic systems), otherwise by Newton iteration from a caller
// supplied start, which converges to the root in that start's basin.

#ifndef DERIVKEY_PERTURB_H_
#define DERIVKEY_PERTURB_H_

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "derivkey/config.h"
#include "derivkey/error.h"
#include "derivkey/polynomial.h"
#include "derivkey/table.h"

namespace derivkey {

struct ScheduleEntry {
  std::string label;
  std::string function;
  std::string variable;
  friend bool operator==(const ScheduleEntry&, const ScheduleEntry&) = default;
};

class Schedule {
 public:
  Schedule() = default;
  // Throws kDuplicateName for repeated labels.
  explicit Schedule(std::vector<ScheduleEntry> entries);

  // One `label,function,variable` per line; blank lines and '#' comments
  // are skipped. Throws kSyntax.
  static Schedule Parse(std::string_view text);

  // Every `function,variable` pair over `field` in declaration order,
  // labelled d_<function>_<variable>.
  static Schedule AllFirstPartials(const VectorField& field);

  const std::vector<ScheduleEntry>& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }
  std::vector<std::string> Labels() const;

  // Throws kUnknownName for undeclared functions or variables.
  void Validate(const VectorField& field) const;

 private:
  std::vector<ScheduleEntry> entries_;
};

struct PerturbedRecord {
  std::vector<std::pair<std::string, double>> values;

  std::vector<double> Values() const;
  friend bool operator==(const PerturbedRecord&, const PerturbedRecord&) = default;
};

enum class ReconstructionMethod { kAffine, kNewton };

struct ReconstructionReport {
  Point point;
  // Infinity norm of (scheduled derivatives at `point`) - (published values).
  double residual = 0.0;
  int iterations = 0;
  ReconstructionMethod method = ReconstructionMethod::kAffine;
};

// Raised by ReconstructNewton with kMaxIterations or kSingularStep; carries
// the iterate with the smallest residual seen.
class ReconstructionError : public Error {
 public:
  ReconstructionError(ErrorCode code, const std::string& message, ReconstructionReport best)
      : Error(code, message), best_(std::move(best)) {}
  const ReconstructionReport& best() const { return best_; }

 private:
  ReconstructionReport best_;
};

PerturbedRecord PerturbPoint(const VectorField& field, const Point& point,
                             const Schedule& schedule);

// Throws kNonAffineDerivative, kRankDeficient, kInconsistentSystem.
ReconstructionReport ReconstructAffine(const VectorField& field, const Schedule& schedule,
                                       const PerturbedRecord& record);

inline constexpr double kDefaultNewtonTolerance = 1e-12;
inline constexpr int kDefaultNewtonMaxIterations = 50;

// Converged when ||r||_inf <= tol * (1 + ||published||_inf).
ReconstructionReport ReconstructNewton(const VectorField& field, const Schedule& schedule,
                                       const PerturbedRecord& record, const Point& x0,
                                       double tol = kDefaultNewtonTolerance,
                                       int max_iter = kDefaultNewtonMaxIterations);

// Row-wise PerturbPoint; errors are re-raised with "row N: " prefixed.
std::vector<PerturbedRecord> PerturbTable(const VectorField& field, const TableDocument& table,
                                          const Schedule& schedule,
                                          const DatasetConfig& config);

// CSV with the schedule labels as header and one record per line.
std::string FormatPerturbedCsv(const Schedule& schedule,
                               const std::vector<PerturbedRecord>& records);
// Columns are matched to schedule labels by header name.
std::vector<PerturbedRecord> ParsePerturbedCsv(std::string_view text, const Schedule& schedule);

}  // namespace derivkey

#endif  // DERIVKEY_PERTURB_H_
