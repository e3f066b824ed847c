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

#ifndef PROSODY_ALIGNER_H_
#define PROSODY_ALIGNER_H_

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "prosody/arpabet.h"
#include "prosody/mappings.h"

namespace prosody {

struct AlignedPair {
  std::string graphemes;  // empty for an inserted phoneme
  PhoneSeq phones;        // empty for a silent grapheme
  bool allowed = false;

  friend bool operator==(const AlignedPair&, const AlignedPair&) = default;
};

// A monotone partition of a word and its pronunciation into pairs.
//
// Cost model: allowed pairs cost 0, a disallowed pair costs
// max(|graphemes|, |phones|). The aligner itself only proposes single-unit
// disallowed pairs (substitution, insertion, deletion), so every disallowed
// pair it emits costs exactly 1; a multi-unit disallowed chunk never beats
// its decomposition into single units.
struct Alignment {
  std::vector<AlignedPair> pairs;
  int cost = 0;

  std::size_t AllowedCount() const;
  std::string Graphemes() const;
  PhoneSeq Phones() const;

  friend bool operator==(const Alignment&, const Alignment&) = default;
};

int PairCost(const AlignedPair& pair);

// Least-cost alignment of `graphemes` (lowercase) to `phones`.
//
// Among equal-cost alignments the result is the one that
//   1. has the most allowed pairs, then
//   2. has the most phones inside allowed pairs, then
//   3. has the longest phoneme sides earliest (compared pair by pair), then
//   4. has the longest grapheme sides earliest, then
//   5. has fewer pairs.
// This is a total order: once 3 and 4 agree the two alignments are equal.
// For whence / W Z EH T it yields wh->W, 0->Z, e->EH, n->T, c->0, e->0.
Alignment Align(std::string_view graphemes, std::span<const std::string> phones,
                const MappingSet& mappings);

struct BestAlignment {
  std::size_t pronunciation_index = 0;
  Alignment alignment;
};

// Aligns against every pronunciation and keeps the cheapest; the first
// listed pronunciation wins ties. `pronunciations` must be nonempty.
BestAlignment AlignBest(std::string_view graphemes,
                        std::span<const PhoneSeq> pronunciations,
                        const MappingSet& mappings);

// Indices of phones whose grapheme side overlaps [start, end). Throws
// RangeOutOfBounds unless start < end <= word length.
std::vector<std::size_t> ProjectSpan(const Alignment& alignment,
                                     std::size_t start, std::size_t end);

// "wh→W, e→EH, r→R, e→∅"
std::string FormatPairs(const Alignment& alignment);

}  // namespace prosody

#endif  // PROSODY_ALIGNER_H_
