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

#include "prosody/mappings.h"

#include <algorithm>
#include <cctype>
#include <fstream>

#include "prosody/error.h"
#include "text_util.h"

namespace prosody {

std::string MappingSet::Key(std::string_view graphemes,
                            std::span<const std::string> phones) {
  std::string key(graphemes);
  key += '\t';
  key += JoinPhones(phones);
  return key;
}

bool MappingSet::Insert(AllowedMapping mapping) {
  if (!keys_.insert(Key(mapping.graphemes, mapping.phones)).second) {
    return false;
  }
  by_graphemes_[mapping.graphemes].push_back(mapping.phones);
  max_graphemes_ = std::max(max_graphemes_, mapping.graphemes.size());
  mappings_.push_back(std::move(mapping));
  return true;
}

bool MappingSet::Contains(std::string_view graphemes,
                          std::span<const std::string> phones) const {
  return keys_.count(Key(graphemes, phones)) > 0;
}

const std::vector<PhoneSeq>& MappingSet::PhonesFor(
    std::string_view graphemes) const {
  static const std::vector<PhoneSeq> kNone;
  auto it = by_graphemes_.find(std::string(graphemes));
  return it == by_graphemes_.end() ? kNone : it->second;
}

MappingSet LoadMappings(std::istream& in) {
  MappingSet set;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) {
      line.erase(hash);
    }
    std::string_view body = internal::Trim(line);
    if (body.empty()) continue;

    auto tab = body.find('\t');
    if (tab == std::string_view::npos) {
      throw Error(ErrorCode::kMalformedLine,
                  "line " + std::to_string(line_no) + ": expected a TAB");
    }
    std::string graphemes(internal::Trim(body.substr(0, tab)));
    std::string_view rhs = internal::Trim(body.substr(tab + 1));
    if (graphemes.empty() || rhs.empty()) {
      throw Error(ErrorCode::kMalformedLine,
                  "line " + std::to_string(line_no) + ": missing side");
    }
    if (graphemes == "_") graphemes.clear();
    for (auto& c : graphemes) {
      c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    }

    PhoneSeq phones;
    if (rhs != "_") {
      for (const auto& p : SplitPhones(rhs)) {
        std::string bare = StripStress(p);
        if (!IsArpabet(bare)) {
          throw Error(ErrorCode::kMalformedLine,
                      "line " + std::to_string(line_no) +
                          ": unknown phoneme '" + p + "'");
        }
        phones.push_back(std::move(bare));
      }
    }
    if (graphemes.empty() && phones.empty()) {
      throw Error(ErrorCode::kBothSidesEmpty,
                  "line " + std::to_string(line_no));
    }
    if (graphemes.size() > kMaxMappingGraphemes ||
        phones.size() > kMaxMappingPhones) {
      throw Error(ErrorCode::kMalformedLine,
                  "line " + std::to_string(line_no) +
                      ": mapping exceeds 4 graphemes or 3 phones");
    }
    set.Insert({std::move(graphemes), std::move(phones)});
  }
  return set;
}

MappingSet LoadMappingsFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIoError, "cannot open " + path);
  return LoadMappings(in);
}

}  // namespace prosody
