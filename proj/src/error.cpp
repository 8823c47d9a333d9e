// Copyright 2026 The zdgame Authors
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

#include "zdgame/error.hpp"

namespace zdgame {

const char* ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kDomain: return "DomainError";
    case ErrorCode::kInfeasibleStrategy: return "InfeasibleStrategy";
    case ErrorCode::kDegenerateEqualizer: return "DegenerateEqualizer";
    case ErrorCode::kSingularSystem: return "SingularSystem";
    case ErrorCode::kNonUniqueStationary: return "NonUniqueStationary";
    case ErrorCode::kDegenerateGame: return "DegenerateGame";
    case ErrorCode::kDegenerateCloud: return "DegenerateCloud";
    case ErrorCode::kIo: return "IoError";
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kInternal: return "InternalError";
  }
  return "UnknownError";
}

const char* ConstraintName(Constraint c) {
  switch (c) {
    case Constraint::kComponentRange: return "component range [0,1]";
    case Constraint::kExtortionFactorRange:
      return "extortion factor range (r-2c)/r <= s < 1";
    case Constraint::kPhiUpperBound:
      return "phi upper bound 1/(s(c-r/2)+r/2)";
    case Constraint::kPhiPositive: return "phi > 0";
  }
  return "unknown constraint";
}

}  // namespace zdgame
