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

#include "derivkey/perturb.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <set>

#include "derivkey/calculus.h"
#include "derivkey/io.h"
#include "derivkey/linalg.h"
#include "text_util.h"

namespace derivkey {
namespace {

struct ScheduledDerivative {
  std::size_t function;
  std::size_t variable;
  Polynomial derivative;
};

std::vector<ScheduledDerivative> Resolve(const VectorField& field, const Schedule& schedule) {
  schedule.Validate(field);
  std::vector<ScheduledDerivative> out;
  out.reserve(schedule.size());
  for (const auto& e : schedule.entries()) {
    std::size_t f = field.FunctionIndex(e.function);
    std::size_t v = field.VariableIndex(e.variable);
    out.push_back({f, v, PartialDerivative(field.functions()[f].second, v)});
  }
  return out;
}

// Published values in schedule order.
std::vector<double> Targets(const Schedule& schedule, const PerturbedRecord& record) {
  if (record.values.size() != schedule.size()) {
    Fail(ErrorCode::kDimensionMismatch,
         "record has " + std::to_string(record.values.size()) + " values, schedule has " +
             std::to_string(schedule.size()) + " entries");
  }
  std::map<std::string, double> by_label(record.values.begin(), record.values.end());
  std::vector<double> out;
  for (const auto& e : schedule.entries()) {
    auto it = by_label.find(e.label);
    if (it == by_label.end()) Fail(ErrorCode::kUnknownName, "record lacks label '" + e.label + "'");
    if (!std::isfinite(it->second)) {
      Fail(ErrorCode::kInvalidArgument, "record value for '" + e.label + "' is not finite");
    }
    out.push_back(it->second);
  }
  return out;
}

double InfNorm(std::span<const double> v) {
  double m = 0.0;
  for (double x : v) m = std::max(m, std::abs(x));
  return m;
}

std::vector<double> Residuals(const std::vector<ScheduledDerivative>& derivs,
                              std::span<const double> x, std::span<const double> targets) {
  std::vector<double> r(derivs.size());
  for (std::size_t e = 0; e < derivs.size(); ++e) {
    r[e] = Evaluate(derivs[e].derivative, x) - targets[e];
  }
  return r;
}

}  // namespace

Schedule::Schedule(std::vector<ScheduleEntry> entries) : entries_(std::move(entries)) {
  std::set<std::string> labels;
  for (const auto& e : entries_) {
    if (!labels.insert(e.label).second) {
      Fail(ErrorCode::kDuplicateName, "duplicate schedule label '" + e.label + "'");
    }
  }
}

Schedule Schedule::Parse(std::string_view text) {
  std::vector<ScheduleEntry> entries;
  std::size_t line_no = 0;
  for (std::string_view line : internal::Lines(text)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    if (internal::Trim(line).empty()) continue;
    auto parts = internal::Split(line, ',');
    if (parts.size() != 3) {
      Fail(ErrorCode::kSyntax, "schedule line " + std::to_string(line_no) +
                                   ": expected 'label,function,variable'");
    }
    ScheduleEntry e{std::string(internal::Trim(parts[0])), std::string(internal::Trim(parts[1])),
                    std::string(internal::Trim(parts[2]))};
    if (e.label.empty() || e.function.empty() || e.variable.empty()) {
      Fail(ErrorCode::kSyntax, "schedule line " + std::to_string(line_no) + ": empty field");
    }
    entries.push_back(std::move(e));
  }
  return Schedule(std::move(entries));
}

Schedule Schedule::AllFirstPartials(const VectorField& field) {
  std::vector<ScheduleEntry> entries;
  for (const auto& [fname, poly] : field.functions()) {
    for (const auto& v : field.variables()) {
      entries.push_back({"d_" + fname + "_" + v, fname, v});
    }
  }
  return Schedule(std::move(entries));
}

std::vector<std::string> Schedule::Labels() const {
  std::vector<std::string> out;
  for (const auto& e : entries_) out.push_back(e.label);
  return out;
}

void Schedule::Validate(const VectorField& field) const {
  const auto& vars = field.variables();
  for (const auto& e : entries_) {
    bool has_function = std::any_of(field.functions().begin(), field.functions().end(),
                                     [&](const auto& f) { return f.first == e.function; });
    if (!has_function) {
      Fail(ErrorCode::kUnknownName,
           "schedule entry '" + e.label + "' names unknown function '" + e.function + "'");
    }
    if (std::find(vars.begin(), vars.end(), e.variable) == vars.end()) {
      Fail(ErrorCode::kUnknownName,
           "schedule entry '" + e.label + "' names unknown variable '" + e.variable + "'");
    }
  }
}

std::vector<double> PerturbedRecord::Values() const {
  std::vector<double> out;
  for (const auto& [label, v] : values) out.push_back(v);
  return out;
}

PerturbedRecord PerturbPoint(const VectorField& field, const Point& point,
                             const Schedule& schedule) {
  const auto derivs = Resolve(field, schedule);
  const auto coords = field.Coordinates(point);
  PerturbedRecord record;
  for (std::size_t e = 0; e < derivs.size(); ++e) {
    record.values.emplace_back(schedule.entries()[e].label,
                               Evaluate(derivs[e].derivative, coords));
  }
  return record;
}

ReconstructionReport ReconstructAffine(const VectorField& field, const Schedule& schedule,
                                       const PerturbedRecord& record) {
  const auto derivs = Resolve(field, schedule);
  const auto targets = Targets(schedule, record);
  const std::size_t n = field.variable_count();
  if (derivs.size() < n) {
    Fail(ErrorCode::kRankDeficient, std::to_string(derivs.size()) +
                                        " published values cannot determine " +
                                        std::to_string(n) + " variables");
  }

  Matrix a(derivs.size(), n);
  std::vector<double> rhs(derivs.size());
  for (std::size_t e = 0; e < derivs.size(); ++e) {
    const Polynomial& d = derivs[e].derivative;
    if (d.TotalDegree() > 1) {
      Fail(ErrorCode::kNonAffineDerivative,
           "d" + schedule.entries()[e].function + "/d" + schedule.entries()[e].variable +
               " has degree " + std::to_string(d.TotalDegree()));
    }
    double constant = 0.0;
    for (const auto& term : d.terms()) {
      auto it = std::find(term.exponents.begin(), term.exponents.end(), 1u);
      if (it == term.exponents.end()) {
        constant = term.coefficient.ToDouble();
      } else {
        a(e, static_cast<std::size_t>(it - term.exponents.begin())) = term.coefficient.ToDouble();
      }
    }
    rhs[e] = targets[e] - constant;
  }

  LinearSolution solution;
  try {
    solution = SolveLinear(a, rhs);
  } catch (const Error& err) {
    if (err.code() != ErrorCode::kSingularSystem) throw;
    Fail(ErrorCode::kRankDeficient, "scheduled derivatives do not determine every variable");
  }

  ReconstructionReport report;
  report.point = field.MakePoint(solution.x);
  report.residual = InfNorm(Residuals(derivs, solution.x, targets));
  report.iterations = 0;
  report.method = ReconstructionMethod::kAffine;
  if (!(report.residual <= 1e-8 * (1.0 + InfNorm(targets)))) {
    Fail(ErrorCode::kInconsistentSystem,
         "published values are inconsistent (residual " + FormatDouble(report.residual) + ")");
  }
  return report;
}

ReconstructionReport ReconstructNewton(const VectorField& field, const Schedule& schedule,
                                       const PerturbedRecord& record, const Point& x0,
                                       double tol, int max_iter) {
  if (max_iter <= 0) Fail(ErrorCode::kInvalidArgument, "max_iter must be positive");
  const auto derivs = Resolve(field, schedule);
  const auto targets = Targets(schedule, record);
  const std::size_t n = field.variable_count();
  if (derivs.size() < n) {
    Fail(ErrorCode::kRankDeficient, "fewer published values than variables");
  }
  const double bound = tol * (1.0 + InfNorm(targets));

  std::vector<double> x = field.Coordinates(x0);
  ReconstructionReport best;
  best.method = ReconstructionMethod::kNewton;
  best.residual = std::numeric_limits<double>::infinity();

  for (int iter = 0;; ++iter) {
    const auto r = Residuals(derivs, x, targets);
    const double norm = InfNorm(r);
    if (norm < best.residual) {
      best.point = field.MakePoint(x);
      best.residual = norm;
      best.iterations = iter;
    }
    if (norm <= bound) {
      return ReconstructionReport{field.MakePoint(x), norm, iter, ReconstructionMethod::kNewton};
    }
    if (iter == max_iter) break;

    // Row e of the step matrix is the gradient of d f / d x_i, which is
    // row i of the Hessian of f.
    std::map<std::size_t, Matrix> hessians;
    Matrix jac(derivs.size(), n);
    for (std::size_t e = 0; e < derivs.size(); ++e) {
      auto it = hessians.find(derivs[e].function);
      if (it == hessians.end()) {
        it = hessians.emplace(derivs[e].function,
                              HessianAt(field.functions()[derivs[e].function].second, x)).first;
      }
      for (std::size_t k = 0; k < n; ++k) jac(e, k) = it->second(derivs[e].variable, k);
    }
    std::vector<double> neg(r.size());
    for (std::size_t e = 0; e < r.size(); ++e) neg[e] = -r[e];

    LinearSolution step;
    try {
      step = SolveLinear(jac, neg);
    } catch (const Error& err) {
      if (err.code() != ErrorCode::kSingularSystem) throw;
      throw ReconstructionError(ErrorCode::kSingularStep,
                                "singular Newton step at iteration " + std::to_string(iter + 1),
                                best);
    }
    for (std::size_t k = 0; k < n; ++k) x[k] += step.x[k];
    if (!std::all_of(x.begin(), x.end(), [](double v) { return std::isfinite(v); })) {
      throw ReconstructionError(ErrorCode::kMaxIterations, "Newton iteration diverged", best);
    }
  }
  throw ReconstructionError(ErrorCode::kMaxIterations,
                            "Newton iteration did not converge in " + std::to_string(max_iter) +
                                " iterations (best residual " + FormatDouble(best.residual) + ")",
                            best);
}

std::vector<PerturbedRecord> PerturbTable(const VectorField& field, const TableDocument& table,
                                          const Schedule& schedule,
                                          const DatasetConfig& config) {
  schedule.Validate(field);
  std::vector<PerturbedRecord> out;
  out.reserve(table.rows.size());
  for (std::size_t r = 0; r < table.rows.size(); ++r) {
    try {
      out.push_back(PerturbPoint(field, RowPoint(table, r, config), schedule));
    } catch (const Error& e) {
      std::string message = e.what();
      const std::string prefix = "row " + std::to_string(r + 1);
      if (!message.starts_with(prefix)) message = prefix + ": " + message;
      throw Error(e.code(), message);
    }
  }
  return out;
}

std::string FormatPerturbedCsv(const Schedule& schedule,
                               const std::vector<PerturbedRecord>& records) {
  std::string out;
  const auto labels = schedule.Labels();
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (i > 0) out += ",";
    out += labels[i];
  }
  out += "\n";
  for (const auto& rec : records) {
    for (std::size_t i = 0; i < rec.values.size(); ++i) {
      if (i > 0) out += ",";
      out += FormatDouble(rec.values[i].second);
    }
    out += "\n";
  }
  return out;
}

std::vector<PerturbedRecord> ParsePerturbedCsv(std::string_view text, const Schedule& schedule) {
  std::vector<std::string_view> lines;
  for (auto line : internal::Lines(text)) {
    if (!internal::Trim(line).empty()) lines.push_back(line);
  }
  if (lines.empty()) Fail(ErrorCode::kEmptyTable, "perturbed CSV is empty");
  const auto header = SplitCsvLine(lines[0]);
  std::vector<std::size_t> source;
  for (const auto& e : schedule.entries()) {
    auto it = std::find(header.begin(), header.end(), e.label);
    if (it == header.end()) {
      Fail(ErrorCode::kMissingColumn, "perturbed CSV lacks column '" + e.label + "'");
    }
    source.push_back(static_cast<std::size_t>(it - header.begin()));
  }
  std::vector<PerturbedRecord> out;
  for (std::size_t r = 1; r < lines.size(); ++r) {
    const auto cells = SplitCsvLine(lines[r]);
    PerturbedRecord rec;
    for (std::size_t k = 0; k < source.size(); ++k) {
      const auto& label = schedule.entries()[k].label;
      auto v = source[k] < cells.size() ? internal::ParseDouble(cells[source[k]]) : std::nullopt;
      if (!v) {
        Fail(ErrorCode::kNonNumericCell,
             "row " + std::to_string(r) + ", column '" + label + "' is not a number");
      }
      rec.values.emplace_back(label, *v);
    }
    out.push_back(std::move(rec));
  }
  return out;
}

}  // namespace derivkey
