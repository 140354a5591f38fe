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

#include "derivkey/pipeline.h"

#include <chrono>
#include <filesystem>
#include <sstream>
#include <system_error>

#include "derivkey/error.h"
#include "derivkey/io.h"

namespace derivkey {
namespace {

std::string Join(const std::filesystem::path& dir, const char* name) {
  return (dir / name).string();
}

}  // namespace

std::string KeygenReport::ToText() const {
  std::ostringstream out;
  out << "jacobian:\n" << FormatLabeledMatrixCsv(jacobian);
  out << "submatrix:\n" << FormatLabeledMatrixCsv(submatrix);
  out << "determinant: " << FormatDouble(determinant) << "\n";
  out << "eigenvalues:\n";
  for (const auto& v : spectrum) out << "  " << FormatComplex(v) << "\n";
  out << "selected eigenvalue: " << FormatDouble(lambda) << "\n";
  out << "key: " << key.ToString() << "\n";
  return out.str();
}

KeygenReport RunKeygen(const DatasetConfig& config, const VectorField& field,
                       const Point& point) {
  config.Validate(field);
  LabeledMatrix jacobian = JacobianAt(field, point);
  LabeledMatrix square = SelectSquareSubmatrix(jacobian, config.submatrix_vars);
  const InvertibilityCheck check = IftInvertibilityCheck(square);
  if (!check.invertible) {
    Fail(ErrorCode::kSingularJacobian,
         "Jacobian block over the selected variables is singular (det " +
             FormatDouble(check.determinant) + ")");
  }
  EigenSet spectrum = Eigenvalues(square.data());
  const double lambda = SelectEigenvalue(spectrum, config.policy, config.imag_tol);
  const KeyScalar key = DeriveKeyScalar(lambda, config.key_scale);
  return KeygenReport{std::move(jacobian), std::move(square), check.determinant,
                      std::move(spectrum), lambda, key};
}

std::string PipelineReport::ToText() const {
  std::ostringstream out;
  out << "row: " << row << "\n";
  out << "perturbed values:";
  for (const auto& [label, v] : record.values) out << " " << label << "=" << FormatDouble(v);
  out << "\n";
  out << "selected eigenvalue: " << FormatDouble(lambda) << "\n";
  out << "key: " << key.ToString() << "\n";
  out << "plaintext bytes: " << plaintext_bytes << "\n";
  out << "ciphertext bytes: " << ciphertext_bytes << "\n";
  out << "round trip verified: " << (verified ? "yes" : "no") << "\n";
  out << "total execution time: " << seconds << " seconds\n";
  return out.str();
}

PipelineReport RunPipeline(const DatasetConfig& config, const VectorField& field,
                           const Schedule& schedule, const TableDocument& table,
                           std::size_t row, std::span<const std::uint8_t> message,
                           const std::string& out_dir) {
  if (row == 0 || row > table.rows.size()) {
    Fail(ErrorCode::kInvalidArgument, "row " + std::to_string(row) + " does not exist (" +
                                          std::to_string(table.rows.size()) + " rows)");
  }
  const std::filesystem::path dir(out_dir);
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec || !std::filesystem::is_directory(dir)) {
    Fail(ErrorCode::kIo, "cannot create output directory '" + out_dir + "'" +
                             (ec ? ": " + ec.message() : std::string()));
  }

  const auto start = std::chrono::steady_clock::now();

  PipelineReport report;
  report.row = row;
  const Point point = RowPoint(table, row - 1, config);
  report.record = PerturbPoint(field, point, schedule);
  const KeygenReport keygen = RunKeygen(config, field, point);
  report.key = keygen.key;
  report.lambda = keygen.lambda;

  const std::vector<std::uint8_t> ciphertext = XorTransform(message, keygen.key);
  const std::vector<std::uint8_t> decrypted = XorTransform(ciphertext, keygen.key);
  report.plaintext_bytes = message.size();
  report.ciphertext_bytes = ciphertext.size();
  report.verified = std::equal(message.begin(), message.end(), decrypted.begin(), decrypted.end());

  auto as_text = [](const std::vector<std::uint8_t>& bytes) {
    return std::string_view(reinterpret_cast<const char*>(bytes.data()), bytes.size());
  };
  const std::string files[] = {Join(dir, "perturbed.csv"), Join(dir, "key.txt"),
                               Join(dir, "keygen.txt"), Join(dir, "ciphertext.bin"),
                               Join(dir, "decrypted.bin"), Join(dir, "report.txt")};
  WriteFile(files[0], FormatPerturbedCsv(schedule, {report.record}));
  WriteFile(files[1], keygen.key.ToString() + "\n");
  WriteFile(files[2], keygen.ToText());
  WriteFile(files[3], as_text(ciphertext));
  WriteFile(files[4], as_text(decrypted));

  report.seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  report.files.assign(std::begin(files), std::end(files));
  WriteFile(files[5], report.ToText());

  if (!report.verified) {
    Fail(ErrorCode::kVerificationFailed, "decrypted bytes differ from the message");
  }
  return report;
}

}  // namespace derivkey
