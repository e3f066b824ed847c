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

#include "prosody/lexicon.h"

#include <algorithm>
#include <fstream>

#include "prosody/error.h"
#include "text_util.h"

namespace prosody {

void Lexicon::Add(std::string_view word, PhoneSeq pronunciation) {
  auto& prons = entries_[internal::ToLower(word)];
  if (std::find(prons.begin(), prons.end(), pronunciation) == prons.end()) {
    prons.push_back(std::move(pronunciation));
  }
}

const std::vector<PhoneSeq>* Lexicon::Find(std::string_view word) const {
  auto it = entries_.find(internal::ToLower(word));
  return it == entries_.end() ? nullptr : &it->second;
}

const std::vector<PhoneSeq>& Lexicon::Lookup(std::string_view word) const {
  if (const auto* prons = Find(word)) return *prons;
  throw Error(ErrorCode::kWordNotFound, std::string(word));
}

namespace {

// "WORD(2)" -> "WORD"; other parentheses are left alone.
std::string_view BaseWord(std::string_view word) {
  if (word.size() > 3 && word.back() == ')') {
    auto open = word.rfind('(');
    if (open != std::string_view::npos && open > 0 && open + 2 < word.size()) {
      auto digits = word.substr(open + 1, word.size() - open - 2);
      if (std::all_of(digits.begin(), digits.end(),
                      [](char c) { return c >= '0' && c <= '9'; })) {
        return word.substr(0, open);
      }
    }
  }
  return word;
}

}  // namespace

Lexicon LoadCmuDict(std::istream& in, const LexiconOptions& options) {
  Lexicon lexicon;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view body = internal::Trim(line);
    if (body.empty() || body.starts_with(";;;")) continue;
    // Some distributions append "# comment" after the pronunciation.
    if (auto hash = body.find(" #"); hash != std::string_view::npos) {
      body = internal::Trim(body.substr(0, hash));
    }
    auto fields = internal::SplitWs(body);
    if (fields.size() < 2) {
      throw Error(ErrorCode::kMalformedLine,
                  "line " + std::to_string(line_no) + ": '" +
                      std::string(body) + "'");
    }
    PhoneSeq pron;
    pron.reserve(fields.size() - 1);
    for (std::size_t k = 1; k < fields.size(); ++k) {
      std::string bare = StripStress(fields[k]);
      if (!IsArpabet(bare) && fields[k] != kPause) {
        throw Error(ErrorCode::kUnknownSymbol,
                    "'" + std::string(fields[k]) + "' on line " +
                        std::to_string(line_no));
      }
      pron.push_back(options.keep_stress ? std::string(fields[k])
                                         : std::move(bare));
    }
    lexicon.Add(BaseWord(fields[0]), std::move(pron));
  }
  return lexicon;
}

Lexicon LoadCmuDictFile(const std::string& path,
                        const LexiconOptions& options) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIoError, "cannot open " + path);
  return LoadCmuDict(in, options);
}

void WriteCmuDict(const Lexicon& lexicon, std::ostream& out) {
  for (const auto& [word, prons] : lexicon.entries()) {
    std::string upper = word;
    for (auto& c : upper) {
      c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
    }
    for (std::size_t k = 0; k < prons.size(); ++k) {
      out << upper;
      if (k > 0) out << '(' << (k + 1) << ')';
      out << "  " << JoinPhones(prons[k]) << '\n';
    }
  }
}

std::vector<LintFinding> LintDictionary(const Lexicon& lexicon,
                                        const MappingSet& mappings) {
  std::vector<LintFinding> findings;
  for (const auto& [word, prons] : lexicon.entries()) {
    // Alignment runs on stressless symbols regardless of lexicon options.
    std::vector<PhoneSeq> bare;
    bare.reserve(prons.size());
    for (const auto& p : prons) {
      PhoneSeq b;
      for (const auto& s : p) b.push_back(StripStress(s));
      bare.push_back(std::move(b));
    }
    BestAlignment best = AlignBest(word, bare, mappings);
    if (best.alignment.cost > 0) {
      findings.push_back({word, prons[best.pronunciation_index],
                          best.alignment, best.alignment.cost});
    }
  }
  std::stable_sort(findings.begin(), findings.end(),
                   [](const LintFinding& a, const LintFinding& b) {
                     return a.cost > b.cost;
                   });
  return findings;
}

}  // namespace prosody
