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

#ifndef PROSODY_SCHEDULE_H_
#define PROSODY_SCHEDULE_H_

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "prosody/aligner.h"
#include "prosody/language.h"
#include "prosody/lexicon.h"
#include "prosody/mandarin.h"
#include "prosody/mappings.h"
#include "prosody/markup.h"
#include "prosody/policy.h"
#include "prosody/transfer_rules.h"

namespace prosody {

inline constexpr std::string_view kScheduleVersion = "present/1";

// One input phone as seen by the synthesizer: its encoder state is repeated
// `repeat` times and every copy gets its own duration factor and additive
// pitch/energy offsets.
struct ScheduleEntry {
  std::string symbol;  // ARPAbet or ","
  int repeat = 1;
  std::vector<double> duration_scale;
  std::vector<double> pitch_offset;
  std::vector<double> energy_offset;

  // A neutral entry for `symbol`.
  static ScheduleEntry Neutral(std::string symbol);

  friend bool operator==(const ScheduleEntry&, const ScheduleEntry&) = default;
};

struct ProsodySchedule {
  std::string version{kScheduleVersion};
  Language language = Language::kEn;
  std::string source_text;
  std::vector<ScheduleEntry> entries;

  // Every entry has repeat 1, scale 1 and zero offsets.
  bool IsNeutral() const;
  int TotalRepeats() const;

  friend bool operator==(const ProsodySchedule&, const ProsodySchedule&) = default;
};

// Throws SchemaViolation naming the first bad field ("entries[3].repeat").
void ValidateEntry(const ScheduleEntry& entry, const std::string& path);
void ValidateSchedule(const ProsodySchedule& schedule);

// =============================================================================
// English
// =============================================================================

struct WordSpan {
  std::string word;  // lowercased lexicon key
  std::size_t char_start = 0;
  std::size_t char_end = 0;
  std::size_t entry_begin = 0;  // [entry_begin, entry_end) in entries
  std::size_t entry_end = 0;
  Alignment alignment;
};

struct EnglishSchedule {
  ProsodySchedule schedule;
  std::vector<WordSpan> words;
};

// Words are maximal runs of letters and inner apostrophes in clean_text.
// Each takes the lexicon pronunciation that aligns best with its spelling;
// effect character spans reach phones through that alignment. Throws
// WordNotFound listing every missing word, or EmptyText when the text has no
// words.
EnglishSchedule BuildEnglishDetailed(const MarkupResult& markup,
                                     const Lexicon& lexicon,
                                     const MappingSet& mappings,
                                     const EffectPolicy& policy = {});
ProsodySchedule BuildEnglish(const MarkupResult& markup, const Lexicon& lexicon,
                             const MappingSet& mappings,
                             const EffectPolicy& policy = {});

// The first wh-word, else the final word; then the final word. Duplicates
// removed.
std::vector<std::size_t> QuestionWords(const std::vector<WordSpan>& words);

// For each listed word the last vowel entry gets at least two subphonemes
// and a rising ramp from accent_low to accent_high. A constant pitch vector
// has the ramp added to it; a shaped one is replaced by the ramp shifted to
// its mean. Throws NoVowelInWord.
void ApplyQuestionAccent(ProsodySchedule& schedule,
                         const std::vector<WordSpan>& words,
                         const std::vector<std::size_t>& question_words,
                         const EffectPolicy& policy = {});

// =============================================================================
// Other languages
// =============================================================================

ProsodySchedule FromAnnotated(std::span<const AnnotatedPhone> phones,
                              Language language, std::string source_text = {});
ProsodySchedule FromAnnotated(std::span<const PlannedPhone> plan,
                              Language language, std::string source_text = {});

// =============================================================================
// Serialization
// =============================================================================

// Canonical "present/1" JSON: fixed key order, one entry per line, numbers
// in shortest round-trip form, -0 written as 0.
std::string Serialize(const ProsodySchedule& schedule);

// Throws VersionMismatch or SchemaViolation(path).
ProsodySchedule Deserialize(std::string_view text);

}  // namespace prosody

#endif  // PROSODY_SCHEDULE_H_
