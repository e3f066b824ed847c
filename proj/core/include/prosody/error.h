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

#ifndef PROSODY_ERROR_H_
#define PROSODY_ERROR_H_

#include <stdexcept>
#include <string>
#include <string_view>

namespace prosody {

// Domain error kinds. The CLI prints ErrorName(code) verbatim, so the names
// are part of the tool's observable output.
enum class ErrorCode {
  kEmptyInput,
  kUnbalancedDelimiter,
  kMalformedLine,
  kUnknownSymbol,
  kBothSidesEmpty,
  kWordNotFound,
  kRangeOutOfBounds,
  kMalformedRule,
  kLengthMismatch,
  kUnknownArpabet,
  kUnknownIpaSymbol,
  kNoRuleMatches,
  kInvalidTone,
  kUnparsableSyllable,
  kInvalidToneDigit,
  kInvalidSubdivisions,
  kEmptyText,
  kNoVowelInWord,
  kVersionMismatch,
  kSchemaViolation,
  kInvalidPolicy,
  kIoError,
};

std::string_view ErrorName(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail);

  ErrorCode code() const { return code_; }
  std::string_view name() const { return ErrorName(code_); }
  // The message without the leading error name.
  const std::string& detail() const { return detail_; }

 private:
  ErrorCode code_;
  std::string detail_;
};

}  // namespace prosody

#endif  // PROSODY_ERROR_H_
