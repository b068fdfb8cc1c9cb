// Copyright 2026 The decohist Authors
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

#include "decohist/error.hpp"

namespace decohist {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kNotUnitary: return "NotUnitary";
    case ErrorCode::kDimensionMismatch: return "DimensionMismatch";
    case ErrorCode::kInvalidBlocks: return "InvalidBlocks";
    case ErrorCode::kInvalidPartition: return "InvalidPartition";
    case ErrorCode::kInvalidState: return "InvalidState";
    case ErrorCode::kLengthMismatch: return "LengthMismatch";
    case ErrorCode::kKTooLarge: return "KTooLarge";
    case ErrorCode::kNotDecoherent: return "NotDecoherent";
    case ErrorCode::kNoWitness: return "NoWitness";
    case ErrorCode::kNotFound: return "NotFound";
    case ErrorCode::kPartitionNotFineGrained: return "PartitionNotFineGrained";
    case ErrorCode::kInvalidK: return "InvalidK";
    case ErrorCode::kCertificateFailed: return "CertificateFailed";
  }
  return "Unknown";
}

}  // namespace decohist
