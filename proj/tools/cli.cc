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


#include "cli.h"

#include <CLI11.hpp>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "derivkey/calculus.h"
#include "derivkey/config.h"
#include "derivkey/error.h"
#include "derivkey/funcfile.h"
#include "derivkey/io.h"
#include "derivkey/keying.h"
#include "derivkey/linalg.h"
#include "derivkey/perturb.h"
#include "derivkey/pipeline.h"
#include "derivkey/table.h"

namespace derivkey::cli {
namespace {

struct Options {
  std::string funcs_path;
  std::string point_text;
  std::string vars_text;
  bool transpose = false;
  std::string matrix_path;
  std::string config_path;
  std::string data_path;
  std::size_t row = 0;
  std::string output;
  std::string perturbed_path;
  std::string x0_text;
  double tol = kDefaultNewtonTolerance;
  int max_iter = kDefaultNewtonMaxIterations;
  std::string key_text;
  std::string in_path;
  std::string message_path;
};

struct Dataset {
  DatasetConfig config;
  VectorField field;
  Schedule schedule;
};

Dataset LoadDataset(const std::string& config_path, bool with_schedule = true) {
  Dataset d;
  d.config = LoadConfigFile(config_path);
  if (d.config.function_file.empty()) {
    Fail(ErrorCode::kInvalidConfig, "config does not name a function_file");
  }
  d.field = ParseFunctionFile(ReadFile(d.config.function_file));
  d.config.Validate(d.field);
  if (!with_schedule) return d;
  d.schedule = d.config.schedule_file.empty()
                   ? Schedule::AllFirstPartials(d.field)
                   : Schedule::Parse(ReadFile(d.config.schedule_file));
  d.schedule.Validate(d.field);
  return d;
}

std::vector<std::string> SplitNames(const std::string& text) {
  std::vector<std::string> names;
  std::string current;
  for (char c : text) {
    if (c == ',') {
      names.push_back(current);
      current.clear();
    } else if (c != ' ') {
      current += c;
    }
  }
  names.push_back(current);
  return names;
}

std::string_view AsText(const std::vector<std::uint8_t>& bytes) {
  return {reinterpret_cast<const char*>(bytes.data()), bytes.size()};
}

std::vector<std::uint8_t> AsBytes(const std::string& text) { return {text.begin(), text.end()}; }

int RunParse(const Options& o, std::ostream& out) {
  out << FormatFunctionFile(ParseFunctionFile(ReadFile(o.funcs_path)));
  return 0;
}

int RunJacobian(const Options& o, std::ostream& out) {
  VectorField field = ParseFunctionFile(ReadFile(o.funcs_path));
  LabeledMatrix j = JacobianAt(field, Point::Parse(o.point_text));
  if (!o.vars_text.empty()) j = SelectSquareSubmatrix(j, SplitNames(o.vars_text));
  if (o.transpose) j = j.Transposed();
  out << FormatLabeledMatrixCsv(j);
  return 0;
}

int RunEigen(const Options& o, std::ostream& out) {
  for (const auto& v : Eigenvalues(ParseMatrixCsv(ReadFile(o.matrix_path)))) {
    out << FormatComplex(v) << "\n";
  }
  return 0;
}

int RunKeygenCommand(const Options& o, std::ostream& out) {
  Dataset d = LoadDataset(o.config_path, /*with_schedule=*/false);
  Point point;
  if (!o.point_text.empty()) {
    point = Point::Parse(o.point_text);
  } else {
    TableDocument table = LoadTable(ReadFile(o.data_path), d.config);
    if (o.row == 0 || o.row > table.rows.size()) {
      Fail(ErrorCode::kInvalidArgument, "row " + std::to_string(o.row) + " does not exist (" +
                                            std::to_string(table.rows.size()) + " rows)");
    }
    point = RowPoint(table, o.row - 1, d.config);
  }
  out << RunKeygen(d.config, d.field, point).ToText();
  return 0;
}

int RunPerturb(const Options& o, std::ostream& out) {
  Dataset d = LoadDataset(o.config_path);
  TableDocument table = LoadTable(ReadFile(o.data_path), d.config);
  auto records = PerturbTable(d.field, table, d.schedule, d.config);
  WriteFile(o.output, FormatPerturbedCsv(d.schedule, records));
  out << "wrote " << records.size() << " perturbed records to " << o.output << "\n";
  return 0;
}

int RunReconstruct(const Options& o, std::ostream& out) {
  Dataset d = LoadDataset(o.config_path);
  auto records = ParsePerturbedCsv(ReadFile(o.perturbed_path), d.schedule);
  TableDocument table;
  for (const auto& v : d.field.variables()) table.columns.push_back(d.config.column_map.at(v));
  std::optional<Point> x0;
  if (!o.x0_text.empty()) x0 = Point::Parse(o.x0_text);
  for (std::size_t r = 0; r < records.size(); ++r) {
    try {
      ReconstructionReport report =
          x0 ? ReconstructNewton(d.field, d.schedule, records[r], *x0, o.tol, o.max_iter)
             : ReconstructAffine(d.field, d.schedule, records[r]);
      table.rows.push_back(d.field.Coordinates(report.point));
    } catch (const Error& e) {
      std::string message = "record " + std::to_string(r + 1) + ": " + e.what();
      if (e.code() == ErrorCode::kNonAffineDerivative) message += " (pass --x0 to use Newton)";
      throw Error(e.code(), message);
    }
  }
  WriteFile(o.output, WriteTableCsv(table, d.config));
  out << "wrote " << table.rows.size() << " reconstructed rows to " << o.output << "\n";
  return 0;
}

int RunCipher(const Options& o, std::ostream& out) {
  KeyScalar key = KeyScalar::Parse(o.key_text);
  std::string data = ReadFile(o.in_path);
  auto transformed = XorTransform(AsBytes(data), key);
  WriteFile(o.output, AsText(transformed));
  out << "wrote " << transformed.size() << " bytes to " << o.output << "\n";
  return 0;
}

int RunPipelineCommand(const Options& o, std::ostream& out) {
  Dataset d = LoadDataset(o.config_path);
  TableDocument table = LoadTable(ReadFile(o.data_path), d.config);
  std::string message = ReadFile(o.message_path);
  PipelineReport report =
      RunPipeline(d.config, d.field, d.schedule, table, o.row, AsBytes(message), o.output);
  out << report.ToText();
  return 0;
}

}  // namespace

int CliDispatch(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Derivative-perturbation and eigenvalue keying toolkit", "derivkey"};
  app.require_subcommand(1);

  auto* parse = app.add_subcommand("parse", "Parse a function file and print its canonical form");
  parse->add_option("file", o.funcs_path, "Function file (.pvf)")->required();

  auto* jacobian = app.add_subcommand("jacobian", "Evaluate the Jacobian at a point");
  jacobian->add_option("--funcs", o.funcs_path, "Function file")->required();
  jacobian->add_option("--point", o.point_text, "Point as \"x1=300,x2=1500,...\"")->required();
  jacobian->add_option("--vars", o.vars_text, "Keep only these columns, e.g. x1,x2,x3");
  jacobian->add_flag("--transpose", o.transpose, "Print variables as rows");

  auto* eigen = app.add_subcommand("eigen", "Eigenvalues of a CSV matrix");
  eigen->add_option("--matrix", o.matrix_path, "Matrix CSV file")->required();

  auto* keygen = app.add_subcommand("keygen", "Derive the key for a data row or point");
  keygen->add_option("--config", o.config_path, "Dataset config")->required();
  auto* row_opt = keygen->add_option("--row", o.row, "1-based data row");
  auto* point_opt = keygen->add_option("--point", o.point_text, "Point instead of a data row");
  auto* data_opt = keygen->add_option("--data", o.data_path, "CSV file holding --row");
  row_opt->excludes(point_opt);
  row_opt->needs(data_opt);
  data_opt->needs(row_opt);

  auto* perturb = app.add_subcommand("perturb", "Replace every row by its derivative record");
  perturb->add_option("--config", o.config_path, "Dataset config")->required();
  perturb->add_option("--data", o.data_path, "Input CSV")->required();
  perturb->add_option("-o,--output", o.output, "Output CSV")->required();

  auto* reconstruct = app.add_subcommand("reconstruct", "Recover rows from derivative records");
  reconstruct->add_option("--config", o.config_path, "Dataset config")->required();
  reconstruct->add_option("--perturbed", o.perturbed_path, "Perturbed CSV")->required();
  reconstruct->add_option("-o,--output", o.output, "Output CSV")->required();
  reconstruct->add_option("--x0", o.x0_text, "Newton start point; affine solve when absent");
  reconstruct->add_option("--tol", o.tol, "Newton tolerance")->check(CLI::PositiveNumber);
  reconstruct->add_option("--max-iter", o.max_iter, "Newton iteration limit")
      ->check(CLI::PositiveNumber);

  CLI::App* ciphers[2];
  const char* cipher_names[] = {"encrypt", "decrypt"};
  for (int i = 0; i < 2; ++i) {
    ciphers[i] = app.add_subcommand(cipher_names[i], "XOR keystream transform of a file");
    ciphers[i]->add_option("--key", o.key_text, "Key as value/scale")->required();
    ciphers[i]->add_option("--in", o.in_path, "Input file")->required();
    ciphers[i]->add_option("--out", o.output, "Output file")->required();
  }

  auto* pipeline = app.add_subcommand("pipeline", "Perturb, derive the key, encrypt and verify");
  pipeline->add_option("--config", o.config_path, "Dataset config")->required();
  pipeline->add_option("--data", o.data_path, "Input CSV")->required();
  pipeline->add_option("--row", o.row, "1-based data row")->required();
  pipeline->add_option("--message", o.message_path, "Message file")->required();
  pipeline->add_option("-o,--output", o.output, "Output directory")->required();

  if (argc > 1 && argv[1][0] != '-') {
    try {
      (void)app.get_subcommand(argv[1]);
    } catch (const CLI::OptionNotFound&) {
      err << "error: unknown subcommand '" << argv[1] << "'\n\n" << app.help();
      return ExitCodeFor(ErrorCode::kUsage);
    }
  }

  try {
    app.parse(argc, argv);
    if (keygen->parsed() && o.point_text.empty() && o.row == 0) {
      throw CLI::RequiredError("keygen needs --row N --data FILE or --point");
    }
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return ExitCodeFor(ErrorCode::kUsage);
  }

  try {
    if (parse->parsed()) return RunParse(o, out);
    if (jacobian->parsed()) return RunJacobian(o, out);
    if (eigen->parsed()) return RunEigen(o, out);
    if (keygen->parsed()) return RunKeygenCommand(o, out);
    if (perturb->parsed()) return RunPerturb(o, out);
    if (reconstruct->parsed()) return RunReconstruct(o, out);
    if (ciphers[0]->parsed() || ciphers[1]->parsed()) return RunCipher(o, out);
    if (pipeline->parsed()) return RunPipelineCommand(o, out);
  } catch (const Error& e) {
    err << "error [" << ErrorCodeName(e.code()) << "]: " << e.what() << "\n";
    return ExitCodeFor(e.code());
  }
  err << app.help();
  return ExitCodeFor(ErrorCode::kUsage);
}

}  // namespace derivkey::cli
