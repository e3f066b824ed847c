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

#include "prosody/schedule.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>

#include "json.hpp"
#include "prosody/error.h"
#include "text_util.h"

namespace prosody {

namespace {

using nlohmann::json;

[[noreturn]] void Schema(const std::string& path, const std::string& what) {
  throw Error(ErrorCode::kSchemaViolation, path + ": " + what);
}

bool IsWordChar(std::string_view text, std::size_t i) {
  if (internal::IsAsciiAlpha(text[i])) return true;
  return text[i] == '\'' && i > 0 && i + 1 < text.size() &&
         internal::IsAsciiAlpha(text[i - 1]) &&
         internal::IsAsciiAlpha(text[i + 1]);
}

struct RawWord {
  std::size_t start;
  std::size_t end;
};

std::vector<RawWord> FindWords(std::string_view text) {
  std::vector<RawWord> out;
  std::size_t i = 0;
  while (i < text.size()) {
    if (!IsWordChar(text, i)) {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < text.size() && IsWordChar(text, j)) ++j;
    out.push_back({i, j});
    i = j;
  }
  return out;
}

bool IsWhWord(std::string_view w) {
  static const std::set<std::string, std::less<>> kWh = {
      "what", "who", "whom", "whose", "where", "when", "why", "which", "how"};
  return kWh.count(w) > 0;
}

// The phone that carries an effect on [lo, hi) of the word: the first vowel
// it projects to, else its first phone.
std::optional<std::size_t> TargetPhone(const WordSpan& w, const PhoneSeq& phones,
                                       std::size_t lo, std::size_t hi) {
  std::vector<std::size_t> proj = ProjectSpan(w.alignment, lo, hi);
  if (proj.empty()) return std::nullopt;
  for (std::size_t p : proj) {
    if (IsVowel(phones[p])) return p;
  }
  return proj.front();
}

void Resize(ScheduleEntry& e, int repeat) {
  auto grow = [repeat](std::vector<double>& v) {
    v.resize(static_cast<std::size_t>(repeat), v.empty() ? 0.0 : v.back());
  };
  grow(e.duration_scale);
  grow(e.pitch_offset);
  grow(e.energy_offset);
  e.repeat = repeat;
}

double Canonical(double v) { return v == 0.0 ? 0.0 : v; }

std::string Number(double v) { return json(Canonical(v)).dump(); }

std::string NumberList(const std::vector<double>& values) {
  std::string out = "[";
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ", ";
    out += Number(values[i]);
  }
  return out + "]";
}

std::vector<double> ReadNumbers(const json& j, const std::string& path) {
  if (!j.is_array()) Schema(path, "expected an array");
  std::vector<double> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (!j[i].is_number()) {
      Schema(path + "[" + std::to_string(i) + "]", "expected a number");
    }
    out.push_back(j[i].get<double>());
  }
  return out;
}

const json& Field(const json& obj, const char* key, const std::string& path) {
  auto it = obj.find(key);
  if (it == obj.end()) Schema(path + "." + key, "missing");
  return *it;
}

}  // namespace

ScheduleEntry ScheduleEntry::Neutral(std::string symbol) {
  return {std::move(symbol), 1, {1.0}, {0.0}, {0.0}};
}

bool ProsodySchedule::IsNeutral() const {
  return std::all_of(entries.begin(), entries.end(), [](const ScheduleEntry& e) {
    return e.repeat == 1 && e.duration_scale == std::vector<double>{1.0} &&
           e.pitch_offset == std::vector<double>{0.0} &&
           e.energy_offset == std::vector<double>{0.0};
  });
}

int ProsodySchedule::TotalRepeats() const {
  int total = 0;
  for (const auto& e : entries) total += e.repeat;
  return total;
}

void ValidateEntry(const ScheduleEntry& e, const std::string& path) {
  if (!IsScheduleSymbol(e.symbol)) {
    Schema(path + ".symbol", "unknown symbol '" + e.symbol + "'");
  }
  if (e.repeat < 1) Schema(path + ".repeat", "must be >= 1");
  const auto n = static_cast<std::size_t>(e.repeat);
  auto check = [&](const std::vector<double>& v, const char* name) {
    if (v.size() != n) {
      Schema(path + "." + name, "length " + std::to_string(v.size()) +
                                    " != repeat " + std::to_string(n));
    }
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (!std::isfinite(v[i])) {
        Schema(path + "." + name + "[" + std::to_string(i) + "]", "not finite");
      }
    }
  };
  check(e.duration_scale, "duration_scale");
  check(e.pitch_offset, "pitch_offset");
  check(e.energy_offset, "energy_offset");
  for (std::size_t i = 0; i < n; ++i) {
    if (e.duration_scale[i] < 0.0) {
      Schema(path + ".duration_scale[" + std::to_string(i) + "]",
             "negative");
    }
  }
}

void ValidateSchedule(const ProsodySchedule& s) {
  if (s.version != kScheduleVersion) {
    throw Error(ErrorCode::kVersionMismatch, s.version);
  }
  for (std::size_t i = 0; i < s.entries.size(); ++i) {
    ValidateEntry(s.entries[i], "entries[" + std::to_string(i) + "]");
  }
}

// -----------------------------------------------------------------------------
// English
// -----------------------------------------------------------------------------

EnglishSchedule BuildEnglishDetailed(const MarkupResult& markup,
                                     const Lexicon& lexicon,
                                     const MappingSet& mappings,
                                     const EffectPolicy& policy) {
  ValidatePolicy(policy);
  const std::string& text = markup.clean_text;
  std::vector<RawWord> raw = FindWords(text);
  if (raw.empty()) throw Error(ErrorCode::kEmptyText, "no words in input");

  std::vector<std::string> missing;
  for (const RawWord& r : raw) {
    std::string key = internal::ToLower(text.substr(r.start, r.end - r.start));
    if (!lexicon.Contains(key) &&
        std::find(missing.begin(), missing.end(), key) == missing.end()) {
      missing.push_back(std::move(key));
    }
  }
  if (!missing.empty()) {
    std::string list;
    for (const auto& m : missing) list += (list.empty() ? "" : ", ") + m;
    throw Error(ErrorCode::kWordNotFound, list);
  }

  EnglishSchedule out;
  out.schedule.language = Language::kEn;
  out.schedule.source_text = text;
  auto& entries = out.schedule.entries;
  std::vector<PhoneSeq> word_phones;

  for (std::size_t w = 0; w < raw.size(); ++w) {
    if (w > 0 && policy.punct_pause > 0.0) {
      std::string_view gap(text.data() + raw[w - 1].end,
                           raw[w].start - raw[w - 1].end);
      if (gap.find_first_of(",;:") != std::string_view::npos) {
        ScheduleEntry pause = ScheduleEntry::Neutral(std::string(kPause));
        pause.duration_scale = {policy.punct_pause};
        entries.push_back(std::move(pause));
      }
    }
    WordSpan span;
    span.word = internal::ToLower(
        text.substr(raw[w].start, raw[w].end - raw[w].start));
    span.char_start = raw[w].start;
    span.char_end = raw[w].end;
    const auto& prons = lexicon.Lookup(span.word);
    BestAlignment best = AlignBest(span.word, prons, mappings);
    span.alignment = std::move(best.alignment);
    PhoneSeq phones;
    for (const auto& p : prons[best.pronunciation_index]) {
      phones.push_back(StripStress(p));
    }
    span.entry_begin = entries.size();
    for (const auto& p : phones) entries.push_back(ScheduleEntry::Neutral(p));
    span.entry_end = entries.size();
    out.words.push_back(std::move(span));
    word_phones.push_back(std::move(phones));
  }

  // Effects clipped to each word, in word-local character offsets.
  bool question = false;
  for (std::size_t w = 0; w < out.words.size(); ++w) {
    const WordSpan& span = out.words[w];
    const PhoneSeq& phones = word_phones[w];
    struct Local {
      EffectSpan effect;
      std::size_t lo, hi;
    };
    std::vector<Local> local;
    for (const EffectSpan& e : markup.effects) {
      if (e.kind == EffectKind::kQuestion) {
        question = true;
        continue;
      }
      std::size_t lo = std::max(e.char_start, span.char_start);
      std::size_t hi = std::min(e.char_end, span.char_end);
      if (lo >= hi) continue;
      local.push_back({e, lo - span.char_start, hi - span.char_start});
    }

    auto entry_at = [&](std::size_t phone) -> ScheduleEntry& {
      return entries[span.entry_begin + phone];
    };

    for (const Local& l : local) {
      if (l.effect.kind != EffectKind::kElongation) continue;
      auto target = TargetPhone(span, phones, l.lo, l.hi);
      if (!target) continue;
      const int k = l.effect.magnitude;
      const auto base = static_cast<int>(l.effect.char_end - l.effect.char_start);
      const double scale =
          std::min(policy.elong_cap, 1.0 + policy.elong_gain * (k - base));

      std::vector<const EffectSpan*> marks;
      for (const Local& m : local) {
        if ((m.effect.kind == EffectKind::kPitchUp ||
             m.effect.kind == EffectKind::kPitchDown) &&
            m.effect.char_start == l.effect.char_start &&
            m.effect.char_end == l.effect.char_end) {
          marks.push_back(&m.effect);
        }
      }
      ScheduleEntry& e = entry_at(*target);
      if (marks.empty()) {
        std::fill(e.duration_scale.begin(), e.duration_scale.end(), scale);
        continue;
      }
      std::stable_sort(marks.begin(), marks.end(),
                       [](const EffectSpan* a, const EffectSpan* b) {
                         return a->run_offset < b->run_offset;
                       });
      const int n = std::max(1, std::min(k, policy.max_split));
      Resize(e, std::max(e.repeat, n));
      std::fill(e.duration_scale.begin(), e.duration_scale.end(), scale);
      for (int j = 0; j < e.repeat; ++j) {
        const int letter = j * k / e.repeat;
        double level = 0.0;
        for (const EffectSpan* m : marks) {
          if (m->run_offset > letter) break;
          const double sign = m->kind == EffectKind::kPitchUp ? 1.0 : -1.0;
          level = sign * policy.mark_pitch * m->magnitude;
        }
        e.pitch_offset[static_cast<std::size_t>(j)] += level;
      }
    }

    for (const Local& l : local) {
      if (l.effect.kind != EffectKind::kPitchUp &&
          l.effect.kind != EffectKind::kPitchDown) {
        continue;
      }
      bool contour = std::any_of(local.begin(), local.end(), [&](const Local& o) {
        return o.effect.kind == EffectKind::kElongation &&
               o.effect.char_start == l.effect.char_start &&
               o.effect.char_end == l.effect.char_end;
      });
      if (contour) continue;
      auto target = TargetPhone(span, phones, l.lo, l.hi);
      if (!target) continue;
      const double sign = l.effect.kind == EffectKind::kPitchUp ? 1.0 : -1.0;
      for (double& p : entry_at(*target).pitch_offset) {
        p += sign * policy.mark_pitch * l.effect.magnitude;
      }
    }

    for (const Local& l : local) {
      if (l.effect.kind != EffectKind::kEmphasis) continue;
      for (std::size_t p : ProjectSpan(span.alignment, l.lo, l.hi)) {
        ScheduleEntry& e = entry_at(p);
        for (double& v : e.energy_offset) v += policy.emph_energy;
        for (double& v : e.pitch_offset) v += policy.emph_pitch;
      }
    }
  }

  if (question) {
    ApplyQuestionAccent(out.schedule, out.words, QuestionWords(out.words),
                        policy);
  }
  ValidateSchedule(out.schedule);
  return out;
}

ProsodySchedule BuildEnglish(const MarkupResult& markup, const Lexicon& lexicon,
                             const MappingSet& mappings,
                             const EffectPolicy& policy) {
  return BuildEnglishDetailed(markup, lexicon, mappings, policy).schedule;
}

std::vector<std::size_t> QuestionWords(const std::vector<WordSpan>& words) {
  if (words.empty()) return {};
  std::vector<std::size_t> out;
  const std::size_t last = words.size() - 1;
  for (std::size_t i = 0; i < words.size(); ++i) {
    if (IsWhWord(words[i].word)) {
      out.push_back(i);
      break;
    }
  }
  if (out.empty() || out.front() != last) out.push_back(last);
  return out;
}

void ApplyQuestionAccent(ProsodySchedule& schedule,
                         const std::vector<WordSpan>& words,
                         const std::vector<std::size_t>& question_words,
                         const EffectPolicy& policy) {
  for (std::size_t w : question_words) {
    if (w >= words.size()) {
      throw Error(ErrorCode::kRangeOutOfBounds,
                  "word " + std::to_string(w) + " of " +
                      std::to_string(words.size()));
    }
    const WordSpan& span = words[w];
    std::optional<std::size_t> vowel;
    for (std::size_t i = span.entry_end; i-- > span.entry_begin;) {
      if (IsVowel(schedule.entries[i].symbol)) {
        vowel = i;
        break;
      }
    }
    if (!vowel) throw Error(ErrorCode::kNoVowelInWord, span.word);
    ScheduleEntry& e = schedule.entries[*vowel];
    Resize(e, std::max(e.repeat, 2));

    const auto n = static_cast<std::size_t>(e.repeat);
    std::vector<double> ramp(n);
    for (std::size_t j = 0; j < n; ++j) {
      ramp[j] = policy.accent_low + (policy.accent_high - policy.accent_low) *
                                        static_cast<double>(j) /
                                        static_cast<double>(n - 1);
    }
    const bool flat = std::all_of(e.pitch_offset.begin(), e.pitch_offset.end(),
                                  [&](double v) { return v == e.pitch_offset[0]; });
    const double base =
        flat ? e.pitch_offset[0]
             : std::accumulate(e.pitch_offset.begin(), e.pitch_offset.end(), 0.0) /
                   static_cast<double>(n);
    for (std::size_t j = 0; j < n; ++j) e.pitch_offset[j] = base + ramp[j];
  }
}

// -----------------------------------------------------------------------------
// Other languages
// -----------------------------------------------------------------------------

ProsodySchedule FromAnnotated(std::span<const AnnotatedPhone> phones,
                              Language language, std::string source_text) {
  ProsodySchedule s;
  s.language = language;
  s.source_text = std::move(source_text);
  for (const AnnotatedPhone& p : phones) {
    s.entries.push_back({p.symbol, 1, {p.duration_factor}, {p.pitch_change},
                         {p.energy_change}});
  }
  ValidateSchedule(s);
  return s;
}

ProsodySchedule FromAnnotated(std::span<const PlannedPhone> plan,
                              Language language, std::string source_text) {
  ProsodySchedule s;
  s.language = language;
  s.source_text = std::move(source_text);
  for (const PlannedPhone& p : plan) {
    const auto n = static_cast<std::size_t>(p.repeat);
    s.entries.push_back({p.phone.symbol, p.repeat,
                         std::vector<double>(n, p.phone.duration_factor),
                         p.pitches,
                         std::vector<double>(n, p.phone.energy_change)});
  }
  ValidateSchedule(s);
  return s;
}

// -----------------------------------------------------------------------------
// Serialization
// -----------------------------------------------------------------------------

std::string Serialize(const ProsodySchedule& s) {
  ValidateSchedule(s);
  std::string out = "{\n";
  out += "  \"version\": " + json(s.version).dump() + ",\n";
  out += "  \"language\": " + json(std::string(LanguageCode(s.language))).dump() +
         ",\n";
  out += "  \"source_text\": " + json(s.source_text).dump() + ",\n";
  if (s.entries.empty()) {
    out += "  \"entries\": []\n}\n";
    return out;
  }
  out += "  \"entries\": [\n";
  for (std::size_t i = 0; i < s.entries.size(); ++i) {
    const ScheduleEntry& e = s.entries[i];
    out += "    {\"symbol\": " + json(e.symbol).dump() +
           ", \"repeat\": " + std::to_string(e.repeat) +
           ", \"duration_scale\": " + NumberList(e.duration_scale) +
           ", \"pitch_offset\": " + NumberList(e.pitch_offset) +
           ", \"energy_offset\": " + NumberList(e.energy_offset) + "}";
    out += i + 1 < s.entries.size() ? ",\n" : "\n";
  }
  out += "  ]\n}\n";
  return out;
}

ProsodySchedule Deserialize(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    Schema("$", e.what());
  }
  if (!doc.is_object()) Schema("$", "expected an object");

  const json& version = Field(doc, "version", "$");
  if (!version.is_string()) Schema("$.version", "expected a string");
  if (version.get<std::string>() != kScheduleVersion) {
    throw Error(ErrorCode::kVersionMismatch,
                "expected " + std::string(kScheduleVersion) + ", got " +
                    version.get<std::string>());
  }
  for (auto it = doc.begin(); it != doc.end(); ++it) {
    if (it.key() != "version" && it.key() != "language" &&
        it.key() != "source_text" && it.key() != "entries") {
      Schema("$." + it.key(), "unknown key");
    }
  }

  ProsodySchedule s;
  const json& lang = Field(doc, "language", "$");
  if (!lang.is_string()) Schema("$.language", "expected a string");
  auto parsed = ParseLanguage(lang.get<std::string>());
  if (!parsed) Schema("$.language", "unknown language");
  s.language = *parsed;

  const json& src = Field(doc, "source_text", "$");
  if (!src.is_string()) Schema("$.source_text", "expected a string");
  s.source_text = src.get<std::string>();

  const json& entries = Field(doc, "entries", "$");
  if (!entries.is_array()) Schema("$.entries", "expected an array");
  for (std::size_t i = 0; i < entries.size(); ++i) {
    const std::string path = "$.entries[" + std::to_string(i) + "]";
    const json& je = entries[i];
    if (!je.is_object()) Schema(path, "expected an object");
    for (auto it = je.begin(); it != je.end(); ++it) {
      static const std::set<std::string, std::less<>> kKeys = {
          "symbol", "repeat", "duration_scale", "pitch_offset",
          "energy_offset"};
      if (!kKeys.count(it.key())) Schema(path + "." + it.key(), "unknown key");
    }
    ScheduleEntry e;
    const json& sym = Field(je, "symbol", path);
    if (!sym.is_string()) Schema(path + ".symbol", "expected a string");
    e.symbol = sym.get<std::string>();
    const json& rep = Field(je, "repeat", path);
    if (!rep.is_number_integer()) Schema(path + ".repeat", "expected an integer");
    if (rep.get<long long>() < 1 || rep.get<long long>() > 1'000'000) {
      Schema(path + ".repeat", "out of range");
    }
    e.repeat = static_cast<int>(rep.get<long long>());
    e.duration_scale =
        ReadNumbers(Field(je, "duration_scale", path), path + ".duration_scale");
    e.pitch_offset =
        ReadNumbers(Field(je, "pitch_offset", path), path + ".pitch_offset");
    e.energy_offset =
        ReadNumbers(Field(je, "energy_offset", path), path + ".energy_offset");
    ValidateEntry(e, path);
    s.entries.push_back(std::move(e));
  }
  return s;
}

}  // namespace prosody
