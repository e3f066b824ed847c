// Copyright (c) 2026 The prosodyc Authors
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

#include "prosody/error.h"

namespace prosody {

std::string_view ErrorName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kEmptyInput: return "EmptyInput";
    case ErrorCode::kUnbalancedDelimiter: return "UnbalancedDelimiter";
    case ErrorCode::kMalformedLine: return "MalformedLine";
    case ErrorCode::kUnknownSymbol: return "UnknownSymbol";
    case ErrorCode::kBothSidesEmpty: return "BothSidesEmpty";
    case ErrorCode::kWordNotFound: return "WordNotFound";
    case ErrorCode::kRangeOutOfBounds: return "RangeOutOfBounds";
    case ErrorCode::kMalformedRule: return "MalformedRule";
    case ErrorCode::kLengthMismatch: return "LengthMismatch";
    case ErrorCode::kUnknownArpabet: return "UnknownArpabet";
    case ErrorCode::kUnknownIpaSymbol: return "UnknownIpaSymbol";
    case ErrorCode::kNoRuleMatches: return "NoRuleMatches";
    case ErrorCode::kInvalidTone: return "InvalidTone";
    case ErrorCode::kUnparsableSyllable: return "UnparsableSyllable";
    case ErrorCode::kInvalidToneDigit: return "InvalidToneDigit";
    case ErrorCode::kInvalidSubdivisions: return "InvalidSubdivisions";
    case ErrorCode::kEmptyText: return "EmptyText";
    case ErrorCode::kNoVowelInWord: return "NoVowelInWord";
    case ErrorCode::kVersionMismatch: return "VersionMismatch";
    case ErrorCode::kSchemaViolation: return "SchemaViolation";
    case ErrorCode::kInvalidPolicy: return "InvalidPolicy";
    case ErrorCode::kIoError: return "IoError";
  }
  return "UnknownError";
}

Error::Error(ErrorCode code, const std::string& detail)
    : std::runtime_error(std::string(ErrorName(code)) + ": " + detail),
      code_(code),
      detail_(detail) {}

}  // namespace prosody
