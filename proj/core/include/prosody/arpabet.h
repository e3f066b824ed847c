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

#ifndef PROSODY_ARPABET_H_
#define PROSODY_ARPABET_H_

#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace prosody {

// A phoneme sequence, one ARPAbet token per element.
using PhoneSeq = std::vector<std::string>;

inline constexpr std::string_view kPause = ",";

// The 39 CMU dictionary phonemes plus AX (schwa), without stress digits.
std::span<const std::string_view> ArpabetInventory();

// True for a stressless ARPAbet token. Stress digits are rejected here; use
// StripStress first when the caller tolerates them.
bool IsArpabet(std::string_view symbol);

// True for ARPAbet tokens or the pause symbol ",".
bool IsScheduleSymbol(std::string_view symbol);

bool IsVowel(std::string_view symbol);

// "EH1" -> "EH". Symbols without a trailing stress digit pass through.
std::string StripStress(std::string_view symbol);

// Splits "W EH R" on whitespace.
PhoneSeq SplitPhones(std::string_view text);
std::string JoinPhones(std::span<const std::string> phones);

}  // namespace prosody

#endif  // PROSODY_ARPABET_H_
