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

#ifndef PROSODY_LANGUAGE_H_
#define PROSODY_LANGUAGE_H_

#include <optional>
#include <string_view>

namespace prosody {

enum class Language { kEn, kDe, kHu, kEs, kCmn };

// "en", "de", "hu", "es", "cmn"
std::string_view LanguageCode(Language language);
std::optional<Language> ParseLanguage(std::string_view code);

}  // namespace prosody

#endif  // PROSODY_LANGUAGE_H_
