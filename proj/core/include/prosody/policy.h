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

#ifndef PROSODY_POLICY_H_
#define PROSODY_POLICY_H_

#include <istream>
#include <string>
#include <string_view>
#include <vector>

namespace prosody {

// Numeric magnitudes for the English effects. Offsets are in the consuming
// model's normalized pitch/energy units; duration values are factors.
struct EffectPolicy {
  double emph_energy = 1.0;   // added over an emphasized word
  double emph_pitch = 0.5;
  double elong_gain = 0.5;    // scale = 1 + gain * (letters - kept letters)
  double elong_cap = 4.0;
  double mark_pitch = 0.5;    // per ^ or _
  double accent_low = -0.5;   // question accent ramp
  double accent_high = 1.0;
  int max_split = 5;          // subphonemes for a pitch-marked elongation
  double punct_pause = 1.0;   // duration of the pause after , ; :  (0 = none)

  friend bool operator==(const EffectPolicy&, const EffectPolicy&) = default;
};

// Throws InvalidPolicy for an unknown key or a bad number. Cross-field
// constraints are left to ValidatePolicy, so overrides may come in any order.
void SetPolicyValue(EffectPolicy& policy, std::string_view key,
                    std::string_view value);

// "key = value" lines, '#' comments. Keys not mentioned keep their defaults.
EffectPolicy LoadPolicy(std::istream& in);
EffectPolicy LoadPolicyFile(const std::string& path);

// elong_cap >= 1, elong_gain >= 0, accent_low < accent_high, max_split >= 1,
// punct_pause >= 0, all values finite.
void ValidatePolicy(const EffectPolicy& policy);

std::vector<std::string> PolicyKeys();

}  // namespace prosody

#endif  // PROSODY_POLICY_H_
