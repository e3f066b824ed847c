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

#include "prosody/arpabet.h"

#include <algorithm>
#include <array>
#include <sstream>

namespace prosody {

namespace {

constexpr std::array<std::string_view, 40> kInventory = {
    "AA", "AE", "AH", "AO", "AW", "AX", "AY", "B",  "CH", "D",
    "DH", "EH", "ER", "EY", "F",  "G",  "HH", "IH", "IY", "JH",
    "K",  "L",  "M",  "N",  "NG", "OW", "OY", "P",  "R",  "S",
    "SH", "T",  "TH", "UH", "UW", "V",  "W",  "Y",  "Z",  "ZH",
};

constexpr std::array<std::string_view, 16> kVowels = {
    "AA", "AE", "AH", "AO", "AW", "AX", "AY", "EH",
    "ER", "EY", "IH", "IY", "OW", "OY", "UH", "UW",
};

}  // namespace

std::span<const std::string_view> ArpabetInventory() { return kInventory; }

bool IsArpabet(std::string_view symbol) {
  return std::find(kInventory.begin(), kInventory.end(), symbol) !=
         kInventory.end();
}

bool IsScheduleSymbol(std::string_view symbol) {
  return symbol == kPause || IsArpabet(symbol);
}

bool IsVowel(std::string_view symbol) {
  return std::find(kVowels.begin(), kVowels.end(), symbol) != kVowels.end();
}

std::string StripStress(std::string_view symbol) {
  if (!symbol.empty() && symbol.back() >= '0' && symbol.back() <= '2') {
    symbol.remove_suffix(1);
  }
  return std::string(symbol);
}

PhoneSeq SplitPhones(std::string_view text) {
  PhoneSeq out;
  std::istringstream in{std::string(text)};
  std::string token;
  while (in >> token) out.push_back(token);
  return out;
}

std::string JoinPhones(std::span<const std::string> phones) {
  std::string out;
  for (const auto& p : phones) {
    if (!out.empty()) out += ' ';
    out += p;
  }
  return out;
}

}  // namespace prosody
