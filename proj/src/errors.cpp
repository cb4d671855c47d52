// Copyright 2026 The twoq Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "twoq/errors.hpp"

namespace twoq {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::NonHermitian:
      return "NonHermitian";
    case ErrorCode::NotUnitary:
      return "NotUnitary";
    case ErrorCode::NotSymmetric:
      return "NotSymmetric";
    case ErrorCode::NotNormalized:
      return "NotNormalized";
    case ErrorCode::NotLocal:
      return "NotLocal";
    case ErrorCode::NotNonlocal:
      return "NotNonlocal";
    case ErrorCode::NotPerfectEntangler:
      return "NotPerfectEntangler";
    case ErrorCode::UnknownRoot:
      return "UnknownRoot";
    case ErrorCode::UnknownGate:
      return "UnknownGate";
    case ErrorCode::InvalidSpec:
      return "InvalidSpec";
    case ErrorCode::InvalidParams:
      return "InvalidParams";
    case ErrorCode::UnsupportedKind:
      return "UnsupportedKind";
    case ErrorCode::DegenerateHamiltonian:
      return "DegenerateHamiltonian";
    case ErrorCode::ParseError:
      return "ParseError";
    case ErrorCode::NoConvergence:
      return "NoConvergence";
    case ErrorCode::VerificationFailed:
      return "VerificationFailed";
    case ErrorCode::BranchSearchFailed:
      return "BranchSearchFailed";
    case ErrorCode::NoSolutionInRange:
      return "NoSolutionInRange";
  }
  return "Unknown";
}

bool is_numerical(ErrorCode code) {
  switch (code) {
    case ErrorCode::NoConvergence:
    case ErrorCode::VerificationFailed:
    case ErrorCode::BranchSearchFailed:
    case ErrorCode::NoSolutionInRange:
      return true;
    default:
      return false;
  }
}

}  // namespace twoq
