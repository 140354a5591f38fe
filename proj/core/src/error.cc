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

#include "derivkey/error.h"

namespace derivkey {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kSyntax: return "SyntaxError";
    case ErrorCode::kUnknownVariable: return "UnknownVariable";
    case ErrorCode::kUnknownName: return "UnknownName";
    case ErrorCode::kNonIntegerExponent: return "NonIntegerExponent";
    case ErrorCode::kDivisionUnsupported: return "DivisionUnsupported";
    case ErrorCode::kDuplicateName: return "DuplicateName";
    case ErrorCode::kMissingColumn: return "MissingColumn";
    case ErrorCode::kNonNumericCell: return "NonNumericCell";
    case ErrorCode::kEmptyTable: return "EmptyTable";
    case ErrorCode::kInvalidConfig: return "InvalidConfig";
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kArityMismatch: return "ArityMismatch";
    case ErrorCode::kNotSquare: return "NotSquare";
    case ErrorCode::kWrongCount: return "WrongCount";
    case ErrorCode::kDimensionMismatch: return "DimensionMismatch";
    case ErrorCode::kDimensionTooLarge: return "DimensionTooLarge";
    case ErrorCode::kSingularSystem: return "SingularSystem";
    case ErrorCode::kSingularJacobian: return "SingularJacobian";
    case ErrorCode::kSingularStep: return "SingularStep";
    case ErrorCode::kRankDeficient: return "RankDeficient";
    case ErrorCode::kInconsistentSystem: return "InconsistentSystem";
    case ErrorCode::kNonAffineDerivative: return "NonAffineDerivative";
    case ErrorCode::kNoConvergence: return "NoConvergence";
    case ErrorCode::kMaxIterations: return "MaxIterations";
    case ErrorCode::kComplexSpectrum: return "ComplexSpectrum";
    case ErrorCode::kIndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::kOverflow: return "Overflow";
    case ErrorCode::kZeroKey: return "ZeroKey";
    case ErrorCode::kVerificationFailed: return "VerificationFailed";
    case ErrorCode::kIo: return "IoError";
    case ErrorCode::kUsage: return "UsageError";
  }
  return "UnknownError";
}

int ExitCodeFor(ErrorCode code) {
  switch (code) {
    case ErrorCode::kUsage:
      return 1;
    case ErrorCode::kSyntax:
    case ErrorCode::kUnknownVariable:
    case ErrorCode::kUnknownName:
    case ErrorCode::kNonIntegerExponent:
    case ErrorCode::kDivisionUnsupported:
    case ErrorCode::kDuplicateName:
    case ErrorCode::kMissingColumn:
    case ErrorCode::kNonNumericCell:
    case ErrorCode::kEmptyTable:
    case ErrorCode::kInvalidConfig:
    case ErrorCode::kInvalidArgument:
    case ErrorCode::kArityMismatch:
    case ErrorCode::kNotSquare:
    case ErrorCode::kWrongCount:
    case ErrorCode::kDimensionMismatch:
    case ErrorCode::kDimensionTooLarge:
      return 2;
    case ErrorCode::kSingularSystem:
    case ErrorCode::kSingularJacobian:
    case ErrorCode::kSingularStep:
    case ErrorCode::kRankDeficient:
    case ErrorCode::kInconsistentSystem:
    case ErrorCode::kNonAffineDerivative:
    case ErrorCode::kNoConvergence:
    case ErrorCode::kMaxIterations:
    case ErrorCode::kComplexSpectrum:
    case ErrorCode::kIndexOutOfRange:
    case ErrorCode::kOverflow:
    case ErrorCode::kZeroKey:
    case ErrorCode::kVerificationFailed:
      return 3;
    case ErrorCode::kIo:
      return 4;
  }
  return 1;
}

void Fail(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace derivkey
