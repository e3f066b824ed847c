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

#include "prosody/language.h"

namespace prosody {

std::string_view LanguageCode(Language language) {
  switch (language) {
    case Language::kEn: return "en";
    case Language::kDe: return "de";
    case Language::kHu: return "hu";
    case Language::kEs: return "es";
    case Language::kCmn: return "cmn";
  }
  return "en";
}

std::optional<Language> ParseLanguage(std::string_view code) {
  for (auto lang : {Language::kEn, Language::kDe, Language::kHu, Language::kEs,
                    Language::kCmn}) {
    if (LanguageCode(lang) == code) return lang;
  }
  return std::nullopt;
}

}  // namespace prosody
