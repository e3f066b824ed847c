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

#include "prosody/markup.h"

#include <algorithm>
#include <fstream>

#include "prosody/error.h"
#include "prosody/lexicon.h"
#include "text_util.h"

namespace prosody {

std::string_view EffectKindName(EffectKind kind) {
  switch (kind) {
    case EffectKind::kEmphasis: return "Emphasis";
    case EffectKind::kElongation: return "Elongation";
    case EffectKind::kPitchUp: return "PitchUp";
    case EffectKind::kPitchDown: return "PitchDown";
    case EffectKind::kQuestion: return "Question";
  }
  return "Unknown";
}

namespace {

using internal::IsAsciiAlpha;
using internal::ToLower;

// Above this many collapsible runs in one word, skip the lexicon search.
constexpr int kMaxCollapseSearchRuns = 6;

bool IsMarkChar(char c) { return c == '^' || c == '_' || c == '~'; }

bool IsVowelLetter(char c) {
  switch (ToLower(c)) {
    case 'a': case 'e': case 'i': case 'o': case 'u': case 'y':
      return true;
    default:
      return false;
  }
}

struct MarkGroup {
  EffectKind kind;
  int count;
};

// One letter (or apostrophe) of a word with the markup attached to it.
struct Element {
  char c;
  std::vector<MarkGroup> marks_before;
  int tildes_after = 0;
};

struct Run {
  std::size_t first = 0;  // index into elements
  int length = 0;         // letters in the raw run
  int tildes = 0;
  int kept = 0;           // letters left after collapsing
  std::size_t clean_start = 0;
  bool is_letter = true;
};

class MarkupParser {
 public:
  MarkupParser(std::string_view raw, const MarkupOptions& options)
      : raw_(raw), options_(options) {}

  MarkupResult Parse() {
    if (internal::Trim(raw_).empty()) {
      throw Error(ErrorCode::kEmptyInput, "no text");
    }
    if (std::count(raw_.begin(), raw_.end(), '*') % 2 != 0) {
      throw Error(ErrorCode::kUnbalancedDelimiter,
                  "odd number of '*' in \"" + std::string(raw_) + "\"");
    }

    std::size_t i = 0;
    while (i < raw_.size()) {
      const char c = raw_[i];
      if (IsAsciiAlpha(c) || IsMarkChar(c)) {
        std::size_t j = i;
        while (j < raw_.size() && (IsAsciiAlpha(raw_[j]) || IsMarkChar(raw_[j]) ||
                                   IsInnerApostrophe(j))) {
          ++j;
        }
        EmitWord(raw_.substr(i, j - i));
        i = j;
      } else if (c == '*') {
        ToggleEmphasis();
        ++i;
      } else if (c == '?') {
        ++i;
      } else {
        out_.clean_text += c;
        ++i;
      }
    }

    if (IsQuestion() && !out_.clean_text.empty()) {
      out_.effects.push_back(
          {EffectKind::kQuestion, 0, out_.clean_text.size(), 1, 0});
    }
    MergeEmphasis();
    std::stable_sort(out_.effects.begin(), out_.effects.end(),
                     [](const EffectSpan& a, const EffectSpan& b) {
                       if (a.char_start != b.char_start) {
                         return a.char_start < b.char_start;
                       }
                       return a.kind < b.kind;
                     });
    return std::move(out_);
  }

 private:
  bool IsInnerApostrophe(std::size_t j) const {
    return raw_[j] == '\'' && j > 0 && j + 1 < raw_.size() &&
           IsAsciiAlpha(raw_[j - 1]) && IsAsciiAlpha(raw_[j + 1]);
  }

  bool IsQuestion() const {
    for (auto it = raw_.rbegin(); it != raw_.rend(); ++it) {
      if (internal::IsSpace(*it) || *it == '!' || *it == '.') continue;
      return *it == '?';
    }
    return false;
  }

  void ToggleEmphasis() {
    if (!emphasis_open_) {
      emphasis_open_ = true;
      emphasis_start_ = out_.clean_text.size();
      return;
    }
    emphasis_open_ = false;
    std::size_t s = emphasis_start_;
    std::size_t e = out_.clean_text.size();
    while (s < e && !IsAsciiAlpha(out_.clean_text[s])) ++s;
    while (e > s && !IsAsciiAlpha(out_.clean_text[e - 1])) --e;
    if (s < e) out_.effects.push_back({EffectKind::kEmphasis, s, e, 1, 0});
  }

  static std::vector<Element> Elements(std::string_view word) {
    std::vector<Element> elements;
    std::vector<MarkGroup> pending;
    for (std::size_t k = 0; k < word.size(); ++k) {
      const char c = word[k];
      if (c == '^' || c == '_') {
        const EffectKind kind =
            c == '^' ? EffectKind::kPitchUp : EffectKind::kPitchDown;
        if (!pending.empty() && pending.back().kind == kind &&
            word[k - 1] == c) {
          ++pending.back().count;
        } else {
          pending.push_back({kind, 1});
        }
      } else if (c == '~') {
        if (!elements.empty() && elements.back().c != '\'') {
          ++elements.back().tildes_after;
        }
      } else {
        elements.push_back({c, std::move(pending), 0});
        pending.clear();
      }
    }
    return elements;
  }

  static std::vector<Run> Runs(const std::vector<Element>& elements) {
    std::vector<Run> runs;
    for (std::size_t k = 0; k < elements.size(); ++k) {
      const bool letter = elements[k].c != '\'';
      if (letter && !runs.empty() && runs.back().is_letter &&
          ToLower(elements[runs.back().first].c) == ToLower(elements[k].c)) {
        ++runs.back().length;
        runs.back().tildes += elements[k].tildes_after;
        continue;
      }
      Run r;
      r.first = k;
      r.length = 1;
      r.tildes = elements[k].tildes_after;
      r.is_letter = letter;
      runs.push_back(r);
    }
    for (auto& r : runs) r.kept = r.length;
    return runs;
  }

  std::string Spell(const std::vector<Element>& elements,
                    const std::vector<Run>& runs) const {
    std::string s;
    for (const auto& r : runs) {
      s.append(static_cast<std::size_t>(r.kept), ToLower(elements[r.first].c));
    }
    return s;
  }

  // Picks 1 or 2 letters for every run of 3+ unless the word is known as
  // written. An in-vocabulary spelling wins; among several known spellings
  // the one keeping the most doubled letters is taken (seeee -> see, not
  // se). Unknown words keep 1 letter.
  void ChooseCollapse(const std::vector<Element>& elements,
                      std::vector<Run>& runs) const {
    std::vector<std::size_t> long_runs;
    for (std::size_t k = 0; k < runs.size(); ++k) {
      if (runs[k].is_letter && runs[k].length >= 3) long_runs.push_back(k);
    }
    if (long_runs.empty()) return;
    // Dictionary words spelled with a run ("oooh", "brrr") stay as written.
    if (options_.lexicon != nullptr &&
        options_.lexicon->Contains(Spell(elements, runs))) {
      return;
    }
    for (auto k : long_runs) runs[k].kept = 1;
    if (options_.lexicon == nullptr ||
        long_runs.size() > static_cast<std::size_t>(kMaxCollapseSearchRuns)) {
      return;
    }
    const std::size_t combos = std::size_t{1} << long_runs.size();
    std::size_t best_len = 0;
    std::vector<int> best;
    // Equal-length hits keep the lowest mask.
    for (std::size_t mask = 0; mask < combos; ++mask) {
      auto trial = runs;
      for (std::size_t b = 0; b < long_runs.size(); ++b) {
        trial[long_runs[b]].kept = (mask >> b) & 1 ? 2 : 1;
      }
      std::string spelled = Spell(elements, trial);
      if (!options_.lexicon->Contains(spelled)) continue;
      if (best.empty() || spelled.size() > best_len) {
        best_len = spelled.size();
        best.clear();
        for (auto k : long_runs) best.push_back(trial[k].kept);
      }
    }
    for (std::size_t b = 0; b < best.size(); ++b) {
      runs[long_runs[b]].kept = best[b];
    }
  }

  void EmitWord(std::string_view word) {
    std::vector<Element> elements = Elements(word);
    if (elements.empty()) return;

    std::string letters;
    for (const auto& e : elements) {
      if (e.c != '\'') letters += e.c;
    }
    const bool all_caps =
        letters.size() >= 2 &&
        std::all_of(letters.begin(), letters.end(),
                    [](char c) { return c >= 'A' && c <= 'Z'; });
    const bool acronym = all_caps && options_.acronyms.count(letters) > 0;
    const bool caps_emphasis = all_caps && !acronym;

    std::vector<Run> runs = Runs(elements);
    if (!acronym) ChooseCollapse(elements, runs);

    const std::size_t word_start = out_.clean_text.size();
    for (auto& r : runs) {
      r.clean_start = out_.clean_text.size();
      for (int k = 0; k < r.kept; ++k) {
        char c = elements[r.first + static_cast<std::size_t>(k)].c;
        out_.clean_text += caps_emphasis ? ToLower(c) : c;
      }
    }
    const std::size_t word_end = out_.clean_text.size();
    if (caps_emphasis) {
      out_.effects.push_back(
          {EffectKind::kEmphasis, word_start, word_end, 1, 0});
    }

    std::vector<bool> elongated(runs.size(), false);
    for (std::size_t k = 0; k < runs.size(); ++k) {
      const Run& r = runs[k];
      if (!r.is_letter) continue;
      if (r.kept < r.length || r.tildes > 0) {
        elongated[k] = true;
        out_.effects.push_back({EffectKind::kElongation, r.clean_start,
                                r.clean_start + static_cast<std::size_t>(r.kept),
                                r.length + r.tildes, 0});
      }
    }

    for (std::size_t k = 0; k < runs.size(); ++k) {
      const Run& r = runs[k];
      for (int pos = 0; pos < r.length; ++pos) {
        const auto& marks =
            elements[r.first + static_cast<std::size_t>(pos)].marks_before;
        for (const auto& m : marks) {
          EmitPitchMark(runs, elongated, k, pos, m);
        }
      }
    }
  }

  void EmitPitchMark(const std::vector<Run>& runs,
                     const std::vector<bool>& elongated, std::size_t run_index,
                     int pos, const MarkGroup& mark) {
    const Run* target = &runs[run_index];
    int offset = 0;
    if (elongated[run_index]) {
      offset = pos;
    } else {
      for (std::size_t k = run_index; k < runs.size(); ++k) {
        if (runs[k].is_letter && IsVowelLetter(RunLetter(runs, k))) {
          target = &runs[k];
          break;
        }
      }
    }
    if (!target->is_letter) return;
    out_.effects.push_back(
        {mark.kind, target->clean_start,
         target->clean_start + static_cast<std::size_t>(target->kept),
         mark.count, offset});
  }

  char RunLetter(const std::vector<Run>& runs, std::size_t k) const {
    return out_.clean_text[runs[k].clean_start];
  }

  void MergeEmphasis() {
    std::vector<EffectSpan> emph;
    std::vector<EffectSpan> rest;
    for (auto& e : out_.effects) {
      (e.kind == EffectKind::kEmphasis ? emph : rest).push_back(e);
    }
    std::sort(emph.begin(), emph.end(),
              [](const EffectSpan& a, const EffectSpan& b) {
                return a.char_start < b.char_start;
              });
    std::vector<EffectSpan> merged;
    for (auto& e : emph) {
      if (!merged.empty() && e.char_start < merged.back().char_end) {
        merged.back().char_end = std::max(merged.back().char_end, e.char_end);
      } else {
        merged.push_back(e);
      }
    }
    out_.effects = std::move(rest);
    out_.effects.insert(out_.effects.end(), merged.begin(), merged.end());
  }

  std::string_view raw_;
  const MarkupOptions& options_;
  MarkupResult out_;
  bool emphasis_open_ = false;
  std::size_t emphasis_start_ = 0;
};

}  // namespace

MarkupResult ParseMarkup(std::string_view raw, const MarkupOptions& options) {
  return MarkupParser(raw, options).Parse();
}

std::set<std::string, std::less<>> LoadAcronymsFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIoError, "cannot open " + path);
  std::set<std::string, std::less<>> out;
  std::string line;
  while (std::getline(in, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    for (auto word : internal::SplitWs(line)) {
      std::string upper(word);
      for (auto& c : upper) {
        c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
      }
      out.insert(std::move(upper));
    }
  }
  return out;
}

}  // namespace prosody
