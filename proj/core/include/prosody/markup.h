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

#ifndef PROSODY_MARKUP_H_
#define PROSODY_MARKUP_H_

#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace prosody {

class Lexicon;

enum class EffectKind { kEmphasis, kElongation, kPitchUp, kPitchDown, kQuestion };

std::string_view EffectKindName(EffectKind kind);

// A prosodic effect over [char_start, char_end) of the clean text.
//
// magnitude: letter count of an elongated run (repeated letters plus
// tildes), number of carets/underscores for pitch marks, 1 otherwise.
// run_offset: for a pitch mark written inside an elongated run
// ("su^^uure"), the index of the raw letter it precedes within that run.
// The mark then holds from that letter to the next mark or the run's end.
// It is 0 for every other effect.
struct EffectSpan {
  EffectKind kind = EffectKind::kEmphasis;
  std::size_t char_start = 0;
  std::size_t char_end = 0;
  int magnitude = 1;
  int run_offset = 0;

  friend bool operator==(const EffectSpan&, const EffectSpan&) = default;
};

struct MarkupOptions {
  // Consulted when collapsing letter runs; without it every run of three or
  // more letters collapses to one.
  const Lexicon* lexicon = nullptr;
  // Uppercase words whose capitals are orthographic (EEG, TTS).
  std::set<std::string, std::less<>> acronyms;
};

struct MarkupResult {
  std::string clean_text;
  std::vector<EffectSpan> effects;  // ordered by (char_start, kind)
};

// Markup understood:
//   *word* or *several words*  emphasis
//   ALLCAPS (2+ letters)       emphasis, lowercased in the clean text unless
//                              listed as an acronym
//   looooong, ti~~lde          elongation; runs of 3+ identical letters
//                              collapse to 1 or 2 letters, preferring a
//                              spelling the lexicon knows, then the one
//                              with more doubled letters
//   ^^x / __x                  pitch up / down on the next vowel letters
//   trailing ?                 question over the whole sentence
//
// Offsets are byte offsets; non-ASCII text passes through untouched.
// Throws EmptyInput for blank input and UnbalancedDelimiter for an odd
// number of '*'.
MarkupResult ParseMarkup(std::string_view raw, const MarkupOptions& options = {});

// Reads one acronym per line ('#' comments), uppercased.
std::set<std::string, std::less<>> LoadAcronymsFile(const std::string& path);

}  // namespace prosody

#endif  // PROSODY_MARKUP_H_
