// Copyright 2026 The twistfrt Authors
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


#include "twistfrt/error.hpp"

namespace twistfrt {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::PoleAtSubstitution: return "PoleAtSubstitution";
    case ErrorCode::AlphabetMismatch: return "AlphabetMismatch";
    case ErrorCode::MissingGeneratorImage: return "MissingGeneratorImage";
    case ErrorCode::CounitUndefinedForLetter: return "CounitUndefinedForLetter";
    case ErrorCode::InvalidRule: return "InvalidRule";
    case ErrorCode::DimMismatch: return "DimMismatch";
    case ErrorCode::NotDiagonalizableQuadratic: return "NotDiagonalizableQuadratic";
    case ErrorCode::NotInvolutive: return "NotInvolutive";
    case ErrorCode::CommutationFailure: return "CommutationFailure";
    case ErrorCode::ConfluenceFailure: return "ConfluenceFailure";
    case ErrorCode::AxiomFailure: return "AxiomFailure";
    case ErrorCode::InconsistentSystem: return "InconsistentSystem";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::SemanticError: return "SemanticError";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

}  // namespace twistfrt
