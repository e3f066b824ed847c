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

#include "prosody/mandarin.h"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <limits>
#include <map>
#include <optional>
#include <set>

#include "prosody/arpabet.h"
#include "prosody/error.h"
#include "text_util.h"

namespace prosody {

namespace {

constexpr double kPitchMin = -2.0;
constexpr double kPitchMax = 2.0;
constexpr double kSmoothEps = 1e-9;

const std::vector<std::string> kInitials = {
    "zh", "ch", "sh", "b", "p", "m", "f", "d", "t", "n", "l",
    "g",  "k",  "h",  "j", "q", "x", "r", "z", "c", "s"};

const std::vector<std::string> kRimes = {
    "a",   "o",    "e",    "i",   "u",    "v",   "ai",  "ei",  "ao",
    "ou",  "an",   "en",   "ang", "eng",  "ong", "er",  "ia",  "io",
    "ie",  "iao",  "iu",   "ian", "in",   "iang", "ing", "iong", "ua",
    "uo",  "uai",  "ui",   "uan", "un",   "uang", "ueng", "ve",  "van",
    "vn"};

// Zero-initial spellings with y/w, mapped to the rime they stand for.
const std::map<std::string, std::string, std::less<>>& GlideSpellings() {
  static const std::map<std::string, std::string, std::less<>> kMap = {
      {"yi", "i"},     {"ya", "ia"},    {"yo", "io"},     {"ye", "ie"},
      {"yao", "iao"},  {"you", "iu"},   {"yan", "ian"},   {"yin", "in"},
      {"yang", "iang"}, {"ying", "ing"}, {"yong", "iong"}, {"yu", "v"},
      {"yue", "ve"},   {"yuan", "van"}, {"yun", "vn"},    {"wu", "u"},
      {"wa", "ua"},    {"wo", "uo"},    {"wai", "uai"},   {"wei", "ui"},
      {"wan", "uan"},  {"wen", "un"},   {"wang", "uang"}, {"weng", "ueng"}};
  return kMap;
}

// Rimes that may stand alone without y/w.
const std::set<std::string, std::less<>> kBareRimes = {
    "a", "o", "e", "ai", "ei", "ao", "ou", "an", "en", "ang", "eng", "er"};

bool IsRime(std::string_view r) {
  return std::find(kRimes.begin(), kRimes.end(), r) != kRimes.end();
}

bool IsSonorant(std::string_view phone) {
  static const std::set<std::string, std::less<>> kSon = {"L", "M", "N", "NG",
                                                          "R", "W", "Y"};
  return kSon.count(phone) > 0;
}

struct ParsedSyllable {
  std::string initial;
  std::string rime;
  bool special = false;
};

std::optional<ParsedSyllable> ParseOne(std::string_view s) {
  if (s.empty()) return std::nullopt;
  if (s.front() == 'y' || s.front() == 'w') {
    const auto& glides = GlideSpellings();
    auto it = glides.find(s);
    if (it == glides.end()) return std::nullopt;
    return ParsedSyllable{"", it->second, false};
  }
  if (kBareRimes.count(s)) return ParsedSyllable{"", std::string(s), false};

  for (const std::string& ini : kInitials) {
    if (!s.starts_with(ini)) continue;
    std::string rime(s.substr(ini.size()));
    if (rime.empty()) return std::nullopt;
    bool palatal = ini == "j" || ini == "q" || ini == "x";
    if (palatal) {
      if (rime.front() == 'u') rime.front() = 'v';
      if (rime.front() != 'i' && rime.front() != 'v') return std::nullopt;
    }
    if ((ini == "l" || ini == "n") && rime == "ue") rime = "ve";
    if (!IsRime(rime) || rime == "er") return std::nullopt;
    bool special = rime == "i" && (ini == "z" || ini == "c" || ini == "s" ||
                                   ini == "zh" || ini == "ch" ||
                                   ini == "sh" || ini == "r");
    return ParsedSyllable{ini, rime, special};
  }
  return std::nullopt;
}

// Fewest syllables; among equal counts the longer first syllable wins.
std::optional<std::vector<ParsedSyllable>> Segment(std::string_view chunk) {
  const std::size_t n = chunk.size();
  constexpr int kInf = std::numeric_limits<int>::max();
  std::vector<int> best(n + 1, kInf);
  std::vector<std::size_t> next(n + 1, 0);
  best[n] = 0;
  for (std::size_t i = n; i-- > 0;) {
    for (std::size_t j = n; j > i; --j) {
      if (best[j] == kInf || !ParseOne(chunk.substr(i, j - i))) continue;
      if (best[j] + 1 < best[i]) {
        best[i] = best[j] + 1;
        next[i] = j;
      }
    }
  }
  if (best[0] == kInf) return std::nullopt;
  std::vector<ParsedSyllable> out;
  for (std::size_t i = 0; i < n; i = next[i]) {
    out.push_back(*ParseOne(chunk.substr(i, next[i] - i)));
  }
  return out;
}

// Lowercases and folds ü / u: to v.
std::string NormalizeWord(std::string_view word) {
  std::string out;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (word.substr(i).starts_with("\xC3\xBC") ||
        word.substr(i).starts_with("\xC3\x9C")) {
      out += 'v';
      ++i;
    } else if (word.substr(i).starts_with("u:")) {
      out += 'v';
      ++i;
    } else {
      out += internal::ToLower(word[i]);
    }
  }
  return out;
}

double Clamp(double p) { return std::clamp(p, kPitchMin, kPitchMax); }

double SampleContour(const std::vector<double>& pitches, double f) {
  if (pitches.size() == 1) return pitches.front();
  double pos = f * static_cast<double>(pitches.size() - 1);
  std::size_t seg = std::min(static_cast<std::size_t>(pos), pitches.size() - 2);
  double local = pos - static_cast<double>(seg);
  return pitches[seg] + (pitches[seg + 1] - pitches[seg]) * local;
}

// Pitched samples of one syllable in order, pauses skipped.
std::vector<double*> Samples(PitchedSyllable& syl) {
  std::vector<double*> out;
  for (PlannedPhone& p : syl.phones) {
    if (p.phone.symbol == kPause) continue;
    for (double& v : p.pitches) out.push_back(&v);
  }
  return out;
}

// Moves the edge plateau of `samples` (ordered from the edge inward) by
// delta, merging with inner samples it reaches.
void ShiftEdge(const std::vector<double*>& samples, double delta) {
  if (samples.empty()) return;
  std::size_t group = 1;
  while (group < samples.size() && *samples[group] == *samples[0]) ++group;
  double remaining = delta;
  while (remaining != 0.0) {
    double v = *samples[0];
    if (group < samples.size()) {
      double w = *samples[group];
      double gap = w - v;
      bool toward = (gap > 0) == (remaining > 0);
      if (toward && std::abs(gap) <= std::abs(remaining)) {
        for (std::size_t k = 0; k < group; ++k) *samples[k] = w;
        remaining -= gap;
        while (group < samples.size() && *samples[group] == w) ++group;
        continue;
      }
    }
    for (std::size_t k = 0; k < group; ++k) *samples[k] = v + remaining;
    remaining = 0.0;
  }
}

}  // namespace

const std::vector<std::string>& PinyinRimes() { return kRimes; }
const std::vector<std::string>& PinyinInitials() { return kInitials; }

ToneContour ToneContourFor(int tone) {
  ToneContour c;
  c.tone = tone;
  switch (tone) {
    case 1: c.points = {5, 5}; break;
    case 2: c.points = {2, 4}; break;
    case 3: c.points = {2, 1, 2}; break;
    case 4: c.points = {5, 2}; break;
    case 5: c.pitches = {0.0}; return c;
    default:
      throw Error(ErrorCode::kInvalidTone, std::to_string(tone));
  }
  for (int p : c.points) c.pitches.push_back(p - 3);
  return c;
}

std::vector<SyllableSpec> ParsePinyin(std::string_view text) {
  std::vector<SyllableSpec> out;
  int word_index = 0;
  std::size_t offset = 0;
  for (std::string_view raw : internal::SplitWs(text)) {
    offset = static_cast<std::size_t>(raw.data() - text.data());
    std::string word = NormalizeWord(raw);
    bool first_in_word = true;
    std::size_t i = 0;
    while (i < word.size()) {
      if (word[i] == '\'' || word[i] == '-') {
        ++i;
        continue;
      }
      std::size_t start = i;
      while (i < word.size() && internal::IsAsciiAlpha(word[i])) ++i;
      std::string chunk = word.substr(start, i - start);
      int tone = 5;
      std::string written = chunk;
      if (i < word.size() && std::isdigit(static_cast<unsigned char>(word[i]))) {
        if (word[i] < '1' || word[i] > '5') {
          throw Error(ErrorCode::kInvalidToneDigit,
                      std::string(1, word[i]) + " at " +
                          std::to_string(offset + i));
        }
        tone = word[i] - '0';
        written += word[i];
        ++i;
      } else if (i < word.size() && !internal::IsAsciiAlpha(word[i]) &&
                 word[i] != '\'' && word[i] != '-') {
        throw Error(ErrorCode::kUnparsableSyllable,
                    "'" + word.substr(i, 1) + "' at " +
                        std::to_string(offset + i));
      }
      if (chunk.empty()) {
        throw Error(ErrorCode::kUnparsableSyllable,
                    "tone digit without syllable at " +
                        std::to_string(offset + start));
      }
      auto parts = Segment(chunk);
      if (!parts) {
        throw Error(ErrorCode::kUnparsableSyllable,
                    "'" + chunk + "' at " + std::to_string(offset + start));
      }
      for (std::size_t k = 0; k < parts->size(); ++k) {
        SyllableSpec s;
        s.initial = (*parts)[k].initial;
        s.rime = (*parts)[k].rime;
        s.special = (*parts)[k].special;
        s.tone = k + 1 == parts->size() ? tone : 5;
        s.pinyin = parts->size() == 1 ? written : s.initial + s.rime;
        if (parts->size() > 1 && k + 1 == parts->size() && tone != 5) {
          s.pinyin += static_cast<char>('0' + tone);
        }
        s.word_initial = first_in_word;
        s.word_index = word_index;
        s.index = static_cast<int>(out.size());
        first_in_word = false;
        out.push_back(std::move(s));
      }
    }
    if (!first_in_word) ++word_index;
  }
  return out;
}

SyllableSpec ExpandSyllable(SyllableSpec spec, const RuleSet& rules) {
  std::vector<Symbol> symbols = {
      Symbol::Segment(spec.initial.empty() ? std::string(kNullInitial)
                                           : spec.initial),
      Symbol::Segment(spec.rime)};
  RuleApplication app = ApplyRulesTraced(symbols, rules);

  // Candidates are the phones emitted for the rime token.
  std::size_t begin = 0, end = app.phones.size();
  for (const RuleFiring& f : app.firings) {
    if (f.source_begin <= 1 && 1 < f.source_end) {
      begin = f.phone_begin;
      end = f.phone_end;
    }
  }
  std::optional<std::size_t> nucleus;
  for (int pass = 0; pass < 2 && !nucleus; ++pass) {
    for (std::size_t k = begin; k < end; ++k) {
      const std::string& sym = app.phones[k].symbol;
      bool ok = pass == 0 ? IsVowel(sym) : IsSonorant(sym);
      if (!ok) continue;
      if (!nucleus ||
          app.phones[k].duration_factor > app.phones[*nucleus].duration_factor) {
        nucleus = k;
      }
    }
  }
  if (!nucleus) {
    if (end == begin) {
      throw Error(ErrorCode::kNoRuleMatches,
                  "no phones for rime '" + spec.rime + "'");
    }
    nucleus = end - 1;
  }

  for (AnnotatedPhone& p : app.phones) {
    p.syllable_id = spec.index;
    if (spec.tone == 5) p.duration_factor *= 0.5;
  }
  spec.phones = std::move(app.phones);
  spec.nucleus_index = *nucleus;
  return spec;
}

PitchedSyllable AssignPitch(const SyllableSpec& spec, int subdivisions) {
  ToneContour contour = ToneContourFor(spec.tone);
  if (subdivisions < 2 ||
      subdivisions < static_cast<int>(contour.pitches.size()) - 1) {
    throw Error(ErrorCode::kInvalidSubdivisions, std::to_string(subdivisions));
  }
  PitchedSyllable out;
  out.spec = spec;
  const double start = contour.pitches.front();
  const double end = contour.pitches.back();
  for (std::size_t k = 0; k < spec.phones.size(); ++k) {
    PlannedPhone p;
    p.phone = spec.phones[k];
    if (p.phone.symbol == kPause) {
      p.pitches = {0.0};
    } else if (k < spec.nucleus_index) {
      p.pitches = {Clamp(start + p.phone.pitch_change)};
    } else if (k > spec.nucleus_index) {
      p.pitches = {Clamp(end + p.phone.pitch_change)};
    } else {
      p.repeat = subdivisions;
      for (int j = 1; j <= subdivisions; ++j) {
        double f = static_cast<double>(j) / subdivisions;
        p.pitches.push_back(
            Clamp(SampleContour(contour.pitches, f) + p.phone.pitch_change));
      }
    }
    out.phones.push_back(std::move(p));
  }
  return out;
}

std::vector<PitchedSyllable> SmoothBoundaries(
    std::vector<PitchedSyllable> syllables, double max_jump) {
  if (!(max_jump > 0.0)) {
    throw Error(ErrorCode::kInvalidPolicy, "max_jump must be positive");
  }
  constexpr int kMaxPasses = 10000;
  for (int pass = 0; pass < kMaxPasses; ++pass) {
    bool changed = false;
    for (std::size_t i = 0; i + 1 < syllables.size(); ++i) {
      std::vector<double*> left = Samples(syllables[i]);
      std::vector<double*> right = Samples(syllables[i + 1]);
      if (left.empty() || right.empty()) continue;
      std::reverse(left.begin(), left.end());
      double a = *left.front();
      double b = *right.front();
      double gap = b - a;
      if (std::abs(gap) <= max_jump + kSmoothEps) continue;
      double excess = (std::abs(gap) - max_jump) / 2.0;
      double dir = gap > 0 ? 1.0 : -1.0;
      ShiftEdge(left, dir * excess);
      ShiftEdge(right, -dir * excess);
      changed = true;
    }
    if (!changed) break;
  }
  return syllables;
}

std::vector<PlannedPhone> InsertWordPauses(
    const std::vector<PitchedSyllable>& syllables,
    double pause_duration_factor) {
  std::vector<PlannedPhone> out;
  for (std::size_t i = 0; i < syllables.size(); ++i) {
    if (i > 0 && syllables[i].spec.word_initial) {
      PlannedPhone pause;
      pause.phone.symbol = std::string(kPause);
      pause.phone.duration_factor = pause_duration_factor;
      pause.pitches = {0.0};
      out.push_back(std::move(pause));
    }
    out.insert(out.end(), syllables[i].phones.begin(),
               syllables[i].phones.end());
  }
  return out;
}

std::vector<PitchedSyllable> PlanSyllables(std::string_view pinyin,
                                           const RuleSet& rules,
                                           const MandarinOptions& options) {
  if (internal::Trim(pinyin).empty()) {
    throw Error(ErrorCode::kEmptyInput, "empty pinyin input");
  }
  std::vector<PitchedSyllable> out;
  for (SyllableSpec& spec : ParsePinyin(pinyin)) {
    out.push_back(
        AssignPitch(ExpandSyllable(std::move(spec), rules), options.subdivisions));
  }
  if (options.smooth) out = SmoothBoundaries(std::move(out), options.max_jump);
  return out;
}

std::vector<PlannedPhone> CompileMandarin(std::string_view pinyin,
                                          const RuleSet& rules,
                                          const MandarinOptions& options) {
  return InsertWordPauses(PlanSyllables(pinyin, rules, options),
                          options.word_pause);
}

}  // namespace prosody
