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

#include "prosody/policy.h"

#include <cmath>
#include <fstream>

#include "prosody/error.h"
#include "text_util.h"

namespace prosody {

namespace {

struct DoubleField {
  const char* key;
  double EffectPolicy::*field;
};

constexpr DoubleField kDoubleFields[] = {
    {"emph_energy", &EffectPolicy::emph_energy},
    {"emph_pitch", &EffectPolicy::emph_pitch},
    {"elong_gain", &EffectPolicy::elong_gain},
    {"elong_cap", &EffectPolicy::elong_cap},
    {"mark_pitch", &EffectPolicy::mark_pitch},
    {"accent_low", &EffectPolicy::accent_low},
    {"accent_high", &EffectPolicy::accent_high},
    {"punct_pause", &EffectPolicy::punct_pause},
};

[[noreturn]] void Invalid(const std::string& detail) {
  throw Error(ErrorCode::kInvalidPolicy, detail);
}

}  // namespace

std::vector<std::string> PolicyKeys() {
  std::vector<std::string> keys;
  for (const auto& f : kDoubleFields) keys.emplace_back(f.key);
  keys.emplace_back("max_split");
  return keys;
}

void SetPolicyValue(EffectPolicy& policy, std::string_view key,
                    std::string_view value) {
  value = internal::Trim(value);
  if (key == "max_split") {
    auto v = internal::ParseInt(value);
    if (!v) Invalid("max_split: not an integer: '" + std::string(value) + "'");
    policy.max_split = *v;
    return;
  }
  for (const auto& f : kDoubleFields) {
    if (key != f.key) continue;
    auto v = internal::ParseDouble(value);
    if (!v) {
      Invalid(std::string(key) + ": not a number: '" + std::string(value) + "'");
    }
    policy.*f.field = *v;
    return;
  }
  Invalid("unknown key '" + std::string(key) + "'");
}

void ValidatePolicy(const EffectPolicy& p) {
  for (const auto& f : kDoubleFields) {
    if (!std::isfinite(p.*f.field)) Invalid(std::string(f.key) + " not finite");
  }
  if (p.elong_cap < 1.0) Invalid("elong_cap must be >= 1");
  if (p.elong_gain < 0.0) Invalid("elong_gain must be >= 0");
  if (!(p.accent_low < p.accent_high)) {
    Invalid("accent_low must be below accent_high");
  }
  if (p.max_split < 1) Invalid("max_split must be >= 1");
  if (p.punct_pause < 0.0) Invalid("punct_pause must be >= 0");
}

EffectPolicy LoadPolicy(std::istream& in) {
  EffectPolicy policy;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::string_view body = internal::Trim(line);
    if (body.empty()) continue;
    auto eq = body.find('=');
    if (eq == std::string_view::npos) {
      Invalid("line " + std::to_string(lineno) + ": expected key = value");
    }
    SetPolicyValue(policy, internal::Trim(body.substr(0, eq)),
                   body.substr(eq + 1));
  }
  ValidatePolicy(policy);
  return policy;
}

EffectPolicy LoadPolicyFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIoError, "cannot open " + path);
  return LoadPolicy(in);
}

}  // namespace prosody
