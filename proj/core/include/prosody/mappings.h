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

#ifndef PROSODY_MAPPINGS_H_
#define PROSODY_MAPPINGS_H_

#include <istream>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "prosody/arpabet.h"

namespace prosody {

inline constexpr std::size_t kMaxMappingGraphemes = 4;
inline constexpr std::size_t kMaxMappingPhones = 3;

// One permitted grapheme-to-phoneme correspondence. Either side may be empty
// (silent letters, inserted phonemes) but not both.
struct AllowedMapping {
  std::string graphemes;
  PhoneSeq phones;

  friend bool operator==(const AllowedMapping&, const AllowedMapping&) = default;
};

class MappingSet {
 public:
  MappingSet() = default;

  // Returns false if the mapping was already present.
  bool Insert(AllowedMapping mapping);

  bool Contains(std::string_view graphemes,
                std::span<const std::string> phones) const;

  // All phone sequences allowed for exactly this grapheme string.
  const std::vector<PhoneSeq>& PhonesFor(std::string_view graphemes) const;

  std::size_t size() const { return keys_.size(); }
  bool empty() const { return keys_.empty(); }
  std::size_t max_graphemes() const { return max_graphemes_; }

  // Mappings in insertion order.
  const std::vector<AllowedMapping>& mappings() const { return mappings_; }

 private:
  static std::string Key(std::string_view graphemes,
                         std::span<const std::string> phones);

  std::vector<AllowedMapping> mappings_;
  std::unordered_set<std::string> keys_;
  std::unordered_map<std::string, std::vector<PhoneSeq>> by_graphemes_;
  std::size_t max_graphemes_ = 0;
};

// Reads "graphemes<TAB>PH1 PH2", one mapping per line; "_" marks an empty
// side, '#' starts a comment. Graphemes are case-folded; stress digits on
// phones are stripped.
MappingSet LoadMappings(std::istream& in);
MappingSet LoadMappingsFile(const std::string& path);

}  // namespace prosody

#endif  // PROSODY_MAPPINGS_H_
