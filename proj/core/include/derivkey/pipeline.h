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

// End-to-end key derivation and the encrypt/verify run.
//
// Key derivation: Jacobian at the sensitive point -> square block over the
// configured variables -> invertibility check -> spectrum -> eigenvalue
// selection -> quantized key. Both parties must hold the same function
// file, configuration and point to derive the same key.

#ifndef DERIVKEY_PIPELINE_H_
#define DERIVKEY_PIPELINE_H_

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "derivkey/calculus.h"
#include "derivkey/config.h"
#include "derivkey/keying.h"
#include "derivkey/perturb.h"
#include "derivkey/table.h"

namespace derivkey {

struct KeygenReport {
  LabeledMatrix jacobian;
  LabeledMatrix submatrix;
  double determinant;
  EigenSet spectrum;
  double lambda;
  KeyScalar key;

  std::string ToText() const;
};

// Throws kSingularJacobian, kComplexSpectrum, or any propagated error.
KeygenReport RunKeygen(const DatasetConfig& config, const VectorField& field,
                       const Point& point);

struct PipelineReport {
  std::size_t row = 0;  // 1-based
  PerturbedRecord record;
  KeyScalar key;
  double lambda = 0.0;
  std::size_t plaintext_bytes = 0;
  std::size_t ciphertext_bytes = 0;
  bool verified = false;
  double seconds = 0.0;
  std::vector<std::string> files;

  std::string ToText() const;
};

// Files written to out_dir (created when missing):
//   perturbed.csv   the published derivative record
//   key.txt         "value/scale"
//   keygen.txt      matrix, determinant, spectrum and chosen eigenvalue
//   ciphertext.bin  XOR-transformed message
//   decrypted.bin   ciphertext transformed back
//   report.txt      summary including wall-clock duration
// `row` is 1-based. Throws kVerificationFailed if the round trip differs.
PipelineReport RunPipeline(const DatasetConfig& config, const VectorField& field,
                           const Schedule& schedule, const TableDocument& table,
                           std::size_t row, std::span<const std::uint8_t> message,
                           const std::string& out_dir);

}  // namespace derivkey

#endif  // DERIVKEY_PIPELINE_H_
