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

#ifndef DERIVKEY_ERROR_H_
#define DERIVKEY_ERROR_H_

#include <stdexcept>
#include <string>
#include <string_view>

namespace derivkey {

// Every failure raised by the library carries one of these codes. The CLI
// maps them onto process exit codes through ExitCodeFor().
enum class ErrorCode {
  // Input / parse errors.
  kSyntax,
  kUnknownVariable,
  kUnknownName,
  kNonIntegerExponent,
  kDivisionUnsupported,
  kDuplicateName,
  kMissingColumn,
  kNonNumericCell,
  kEmptyTable,
  kInvalidConfig,
  kInvalidArgument,
  // Shape errors.
  kArityMismatch,
  kNotSquare,
  kWrongCount,
  kDimensionMismatch,
  kDimensionTooLarge,
  // Numeric errors.
  kSingularSystem,
  kSingularJacobian,
  kSingularStep,
  kRankDeficient,
  kInconsistentSystem,
  kNonAffineDerivative,
  kNoConvergence,
  kMaxIterations,
  kComplexSpectrum,
  kIndexOutOfRange,
  kOverflow,
  kZeroKey,
  kVerificationFailed,
  // Environment.
  kIo,
  kUsage,
};

std::string_view ErrorCodeName(ErrorCode code);

// Process exit code for `code`: 1 usage, 2 parse, 3 numeric, 4 I/O.
int ExitCodeFor(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] void Fail(ErrorCode code, const std::string& message);

}  // namespace derivkey

#endif  // DERIVKEY_ERROR_H_
