// Copyright 2026 The liouvq Authors
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

#include "liouvq/errors.hpp"

namespace liouvq {

const char* error_code_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::NotHermitian: return "NotHermitian";
    case ErrorCode::NotAntisymmetric: return "NotAntisymmetric";
    case ErrorCode::NegativeRateMatrix: return "NegativeRateMatrix";
    case ErrorCode::InvalidParams: return "InvalidParams";
    case ErrorCode::AnsatzViolation: return "AnsatzViolation";
    case ErrorCode::NoConvergence: return "NoConvergence";
    case ErrorCode::SingularTheta: return "SingularTheta";
    case ErrorCode::ZeroD2: return "ZeroD2";
    case ErrorCode::RootCountMismatch: return "RootCountMismatch";
    case ErrorCode::PolynomialIllConditioned: return "PolynomialIllConditioned";
    case ErrorCode::MarginalSpectrum: return "MarginalSpectrum";
    case ErrorCode::Singular: return "Singular";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::NotIsing: return "NotIsing";
    case ErrorCode::DegenerateNess: return "DegenerateNess";
    case ErrorCode::IoError: return "IoError";
  }
  return "UnknownError";
}

}  // namespace liouvq
