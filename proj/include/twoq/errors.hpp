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

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace twoq {

enum class ErrorCode {
  // Bad input: caller violated a precondition.
  NonHermitian,
  NotUnitary,
  NotSymmetric,
  NotNormalized,
  NotLocal,
  NotNonlocal,
  NotPerfectEntangler,
  UnknownRoot,
  UnknownGate,
  InvalidSpec,
  InvalidParams,
  UnsupportedKind,
  DegenerateHamiltonian,
  ParseError,
  // Numerical failure: input was fine but a solver gave up.
  NoConvergence,
  VerificationFailed,
  BranchSearchFailed,
  NoSolutionInRange,
};

std::string_view error_code_name(ErrorCode code);

/// True for codes that signal a numerical pathology rather than bad input.
bool is_numerical(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace twoq
