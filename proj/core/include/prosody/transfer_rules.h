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

#ifndef PROSODY_TRANSFER_RULES_H_
#define PROSODY_TRANSFER_RULES_H_

#include <istream>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "prosody/language.h"

namespace prosody {

// =============================================================================
// Source-language symbols
// =============================================================================
//
// IPA text is tokenized into segments plus two structural tokens: syllable
// breaks (".") and word boundaries ("‖", written as a space in the input).
// Stress (ˈ) and length (ː) marks are not tokens; they become flags on the
// following / preceding segment.

enum class SymbolKind { kSegment, kSyllableBreak, kWordBoundary };

struct Symbol {
  SymbolKind kind = SymbolKind::kSegment;
  std::string text;  // "." and "‖" for the structural kinds
  bool stressed = false;
  bool long_mark = false;

  static Symbol Segment(std::string text, bool stressed = false,
                        bool long_mark = false) {
    return {SymbolKind::kSegment, std::move(text), stressed, long_mark};
  }
  static Symbol Break() { return {SymbolKind::kSyllableBreak, ".", false, false}; }
  static Symbol Boundary() {
    return {SymbolKind::kWordBoundary, "‖", false, false};
  }

  // Text with its marks restored, e.g. "ˈi" or "kː".
  std::string Display() const;

  friend bool operator==(const Symbol&, const Symbol&) = default;
};

// One output phone with its prosody adjustments. Duration is a factor on the
// model's predicted duration; pitch and energy are additive offsets in the
// model's normalized units.
struct AnnotatedPhone {
  std::string symbol;  // ARPAbet or ","
  double duration_factor = 1.0;
  double pitch_change = 0.0;
  double energy_change = 0.0;
  std::optional<int> syllable_id;

  friend bool operator==(const AnnotatedPhone&, const AnnotatedPhone&) = default;
};

// =============================================================================
// Rules
// =============================================================================

struct SourceToken {
  SymbolKind kind = SymbolKind::kSegment;
  std::string text;
  bool require_stress = false;
  bool require_long = false;
};

// Single-symbol context test applied to the neighbour of a match.
struct ContextPredicate {
  enum class Kind { kAny, kBoundary, kBreak, kVowel, kConsonant, kStressed, kSet };
  Kind kind = Kind::kAny;
  bool require_stress = false;
  std::set<std::string, std::less<>> members;  // for kSet
};

struct MappingRule {
  std::vector<SourceToken> source;
  ContextPredicate left;
  ContextPredicate right;
  std::vector<std::string> targets;
  std::vector<double> durations;
  std::vector<double> pitch_changes;
  std::vector<double> energy_changes;
  int priority = 0;
  int line = 0;  // 1-based line in the rule file
};

class RuleSet {
 public:
  Language language() const { return language_; }
  double default_duration() const { return default_duration_; }

  // Ordered by priority, then source length, then specificity, then file
  // order; ApplyRules fires the first match.
  const std::vector<MappingRule>& rules() const { return rules_; }
  bool empty() const { return rules_.empty(); }

  bool IsVowel(std::string_view segment) const;
  // Segment spellings known to the tokenizer, longest first.
  const std::vector<std::string>& alphabet() const { return alphabet_; }

 private:
  friend RuleSet LoadRules(std::istream& in, Language language);

  Language language_ = Language::kEn;
  double default_duration_ = 1.0;
  std::vector<MappingRule> rules_;
  std::set<std::string, std::less<>> vowels_;
  std::vector<std::string> alphabet_;
};

// Rule file format, one rule per line:
//
//   source [| left _ right] -> T1:D1:P1:E1 T2:D2 ... [@priority]
//   source [| left _ right] -> T1 T2 ... D=[d1,d2] P=[..] E=[..] [@priority]
//
// Source tokens are space separated ("o . ˈi"); a leading ˈ requires stress,
// a trailing ː (or ':') requires length. "." and "‖" match syllable breaks
// and word boundaries. Context predicates: "#" word boundary or edge, "."
// syllable break, "V" vowel, "C" consonant, "ˈ" stressed segment, "ˈV"
// stressed vowel, "{a,b}" or a bare symbol for explicit sets. Omitted D takes
// the file's default duration, omitted P and E are 0.
//
// Directives: "%language xx", "%default_duration x", "%vowels a e ...",
// "%alphabet ..." (extra tokenizer symbols). Lines starting with '#' are
// comments.
RuleSet LoadRules(std::istream& in, Language language);
RuleSet LoadRulesFile(const std::string& path, Language language);

// Longest-match tokenization against the rule set's alphabet. Throws
// UnknownIpaSymbol with the code point and its index.
std::vector<Symbol> TokenizeIpa(std::string_view text, const RuleSet& rules);

struct RuleFiring {
  int rule = -1;  // index into rules(); -1 for an unmatched break/boundary
  std::size_t source_begin = 0;
  std::size_t source_end = 0;
  std::size_t phone_begin = 0;
  std::size_t phone_end = 0;
};

struct RuleApplication {
  std::vector<AnnotatedPhone> phones;
  std::vector<RuleFiring> firings;
};

// Left-to-right rewrite: at each position the first rule whose source and
// contexts match fires and consumes its source. Syllable breaks and word
// boundaries that no rule consumes emit nothing. Throws NoRuleMatches for an
// uncovered segment.
std::vector<AnnotatedPhone> ApplyRules(std::span<const Symbol> symbols,
                                       const RuleSet& rules);
RuleApplication ApplyRulesTraced(std::span<const Symbol> symbols,
                                 const RuleSet& rules);

}  // namespace prosody

#endif  // PROSODY_TRANSFER_RULES_H_
