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

#ifndef PROSODY_MANDARIN_H_
#define PROSODY_MANDARIN_H_

#include <string>
#include <string_view>
#include <vector>

#include "prosody/transfer_rules.h"

namespace prosody {

// =============================================================================
// Mandarin front end
// =============================================================================
//
// Pipeline: ParsePinyin -> ExpandSyllable (cmn rule set) -> AssignPitch ->
// SmoothBoundaries -> InsertWordPauses. Input is toned pinyin, already split
// into words by spaces ("ni3hao3 ma5"); tone sandhi and erhua are not
// modelled.

inline constexpr int kDefaultSubdivisions = 3;
inline constexpr double kDefaultMaxJump = 2.0;
inline constexpr double kDefaultWordPause = 0.3;

// The initial of a vowel-initial syllable is empty; for rule matching it is
// the null-onset symbol "'".
inline constexpr std::string_view kNullInitial = "'";

struct ToneContour {
  int tone = 5;
  std::vector<int> points;      // five-point scale, empty for the neutral tone
  std::vector<double> pitches;  // points - 3, or {0} for the neutral tone
};

// Throws InvalidTone outside 1..5.
ToneContour ToneContourFor(int tone);

struct SyllableSpec {
  std::string pinyin;   // as written, with its tone digit if any
  std::string initial;  // "" for zero-initial syllables
  std::string rime;     // normalized: y/w spellings restored, "v" for ü
  int tone = 5;
  // Retroflex/dental "-i" syllables (zi ci si zhi chi shi ri), which are not
  // an initial plus the ordinary rime i.
  bool special = false;
  bool word_initial = false;
  int index = 0;        // position in the utterance
  int word_index = 0;
  std::vector<AnnotatedPhone> phones;  // filled by ExpandSyllable
  std::size_t nucleus_index = 0;
};

// Throws UnparsableSyllable (with the character offset) or InvalidToneDigit.
// A letter chunk without a tone digit is neutral; a chunk holding several
// syllables ("pengyou3") gives the digit to the last one.
std::vector<SyllableSpec> ParsePinyin(std::string_view text);

// Applies the cmn rules to (initial or "'", rime). The nucleus is the
// longest vowel produced for the rime, falling back to the longest sonorant.
// Neutral-tone syllables have every duration factor halved.
SyllableSpec ExpandSyllable(SyllableSpec spec, const RuleSet& rules);

// A phone with its subphoneme plan: `repeat` copies of the encoder state,
// one pitch per copy.
struct PlannedPhone {
  AnnotatedPhone phone;
  int repeat = 1;
  std::vector<double> pitches;

  friend bool operator==(const PlannedPhone&, const PlannedPhone&) = default;
};

struct PitchedSyllable {
  SyllableSpec spec;
  std::vector<PlannedPhone> phones;
};

// Phones before the nucleus take the contour's start pitch, phones after it
// the end pitch, and the nucleus is split into `subdivisions` subphonemes
// sampled along the piecewise-linear contour at k/n, k = 1..n. Pauses carry
// pitch 0. Pitches are clamped to [-2, 2].
PitchedSyllable AssignPitch(const SyllableSpec& spec,
                            int subdivisions = kDefaultSubdivisions);

// Limits the pitch step between adjacent syllables to max_jump by moving the
// two edge levels toward their mean. An edge level is the plateau of equal
// samples at the syllable edge; it moves as a unit, and absorbs the next
// sample when it reaches it, so samples never cross. Pauses are skipped, so
// smoothing also applies across word pauses.
std::vector<PitchedSyllable> SmoothBoundaries(
    std::vector<PitchedSyllable> syllables, double max_jump = kDefaultMaxJump);

// Flattens the syllables, inserting a pause phone with the given duration
// factor before every word after the first.
std::vector<PlannedPhone> InsertWordPauses(
    const std::vector<PitchedSyllable>& syllables,
    double pause_duration_factor = kDefaultWordPause);

struct MandarinOptions {
  int subdivisions = kDefaultSubdivisions;
  double max_jump = kDefaultMaxJump;
  double word_pause = kDefaultWordPause;
  bool smooth = true;
};

std::vector<PitchedSyllable> PlanSyllables(std::string_view pinyin,
                                           const RuleSet& rules,
                                           const MandarinOptions& options = {});
std::vector<PlannedPhone> CompileMandarin(std::string_view pinyin,
                                          const RuleSet& rules,
                                          const MandarinOptions& options = {});

// Every rime spelling ParsePinyin can produce, and the initials, for
// coverage checks over a rule set.
const std::vector<std::string>& PinyinRimes();
const std::vector<std::string>& PinyinInitials();

}  // namespace prosody

#endif  // PROSODY_MANDARIN_H_
