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

#ifndef PROSODY_LEXICON_H_
#define PROSODY_LEXICON_H_

#include <istream>
#include <map>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "prosody/aligner.h"
#include "prosody/arpabet.h"
#include "prosody/mappings.h"

namespace prosody {

struct LexiconOptions {
  // Keep the 0/1/2 stress digits on vowels instead of stripping them.
  bool keep_stress = false;
};

// Pronouncing dictionary keyed by lowercase word. Immutable after loading.
class Lexicon {
 public:
  Lexicon() = default;

  // Appends a pronunciation; identical duplicates are dropped.
  void Add(std::string_view word, PhoneSeq pronunciation);

  // nullptr when the word is absent. Never returns an empty list.
  const std::vector<PhoneSeq>* Find(std::string_view word) const;

  // Like Find but throws WordNotFound.
  const std::vector<PhoneSeq>& Lookup(std::string_view word) const;

  bool Contains(std::string_view word) const { return Find(word) != nullptr; }
  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }

  // Sorted by word.
  const std::map<std::string, std::vector<PhoneSeq>, std::less<>>& entries()
      const {
    return entries_;
  }

  friend bool operator==(const Lexicon&, const Lexicon&) = default;

 private:
  std::map<std::string, std::vector<PhoneSeq>, std::less<>> entries_;
};

// CMU Pronouncing Dictionary text: "WORD  PH1 PH2 ...", ";;;" comments,
// "WORD(2)" alternates merged under WORD.
Lexicon LoadCmuDict(std::istream& in, const LexiconOptions& options = {});
Lexicon LoadCmuDictFile(const std::string& path,
                        const LexiconOptions& options = {});

// Writes the lexicon back in CMU format (uppercase words, "(n)" alternates).
void WriteCmuDict(const Lexicon& lexicon, std::ostream& out);

struct LintFinding {
  std::string word;
  PhoneSeq pronunciation;
  Alignment alignment;
  int cost = 0;
};

// Entries whose cheapest alignment (over all of their pronunciations) is not
// free, most expensive first and then alphabetical. These are candidate
// dictionary errors; nothing is corrected.
std::vector<LintFinding> LintDictionary(const Lexicon& lexicon,
                                        const MappingSet& mappings);

}  // namespace prosody

#endif  // PROSODY_LEXICON_H_
