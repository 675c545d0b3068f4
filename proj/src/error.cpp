// Copyright 2026 The symgauss Authors
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

#include "symgauss/error.hpp"

namespace symgauss {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::OverlappingBlocks: return "OverlappingBlocks";
    case ErrorKind::UncoveredElement: return "UncoveredElement";
    case ErrorKind::EmptyBlock: return "EmptyBlock";
    case ErrorKind::UnknownElement: return "UnknownElement";
    case ErrorKind::GroundMismatch: return "GroundMismatch";
    case ErrorKind::UnknownClass: return "UnknownClass";
    case ErrorKind::UnknownVertex: return "UnknownVertex";
    case ErrorKind::InvalidGraph: return "InvalidGraph";
    case ErrorKind::NotAutomorphism: return "NotAutomorphism";
    case ErrorKind::NotPermutation: return "NotPermutation";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::NotPositiveDefinite: return "NotPositiveDefinite";
    case ErrorKind::MissingParameter: return "MissingParameter";
    case ErrorKind::SamplingExhausted: return "SamplingExhausted";
    case ErrorKind::SingularProjection: return "SingularProjection";
    case ErrorKind::NotConverged: return "NotConverged";
    case ErrorKind::DegenerateW: return "DegenerateW";
    case ErrorKind::NonNestedModels: return "NonNestedModels";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::ValidationError: return "ValidationError";
    case ErrorKind::ColumnMismatch: return "ColumnMismatch";
    case ErrorKind::InternalInconsistency: return "InternalInconsistency";
  }
  return "Unknown";
}

}  // namespace symgauss
