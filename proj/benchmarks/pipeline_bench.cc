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

#include <benchmark/benchmark.h>

#include <string>

#include "prosody/aligner.h"
#include "prosody/lexicon.h"
#include "prosody/mandarin.h"
#include "prosody/schedule.h"

namespace {

std::string Data(const char* rel) {
  return std::string(PROSODYC_BENCH_DATA_DIR) + "/" + rel;
}

const prosody::MappingSet& Mappings() {
  static const auto m = prosody::LoadMappingsFile(Data("english/mappings.tsv"));
  return m;
}

const prosody::Lexicon& Sample() {
  static const auto l = prosody::LoadCmuDictFile(Data("english/sample.dict"));
  return l;
}

const prosody::RuleSet& Cmn() {
  static const auto r =
      prosody::LoadRulesFile(Data("rules/cmn.rules"), prosody::Language::kCmn);
  return r;
}

void BM_AlignWhence(benchmark::State& state) {
  const prosody::PhoneSeq phones = {"W", "Z", "EH", "T"};
  for (auto _ : state) {
    benchmark::DoNotOptimize(prosody::Align("whence", phones, Mappings()));
  }
}
BENCHMARK(BM_AlignWhence);

void BM_LintSample(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(prosody::LintDictionary(Sample(), Mappings()));
  }
}
BENCHMARK(BM_LintSample)->Unit(benchmark::kMillisecond);

void BM_Mandarin(benchmark::State& state) {
  const std::string text = "wo3 men5 yi1qi3 qu4 bei3jing1 kan4 peng2you3";
  for (auto _ : state) {
    benchmark::DoNotOptimize(prosody::CompileMandarin(text, Cmn()));
  }
}
BENCHMARK(BM_Mandarin);

void BM_EnglishEffects(benchmark::State& state) {
  prosody::MarkupOptions o;
  o.lexicon = &Sample();
  const std::string text = "What was *that*? A looooong time, Su^u^^u^u_ure!";
  for (auto _ : state) {
    auto m = prosody::ParseMarkup(text, o);
    benchmark::DoNotOptimize(prosody::BuildEnglish(m, Sample(), Mappings()));
  }
}
BENCHMARK(BM_EnglishEffects);

void BM_SerializeRoundTrip(benchmark::State& state) {
  auto plan = prosody::CompileMandarin("ni3hao3 ma5 tian2", Cmn());
  auto s = prosody::FromAnnotated(plan, prosody::Language::kCmn, "ni3hao3 ma5 tian2");
  for (auto _ : state) {
    benchmark::DoNotOptimize(prosody::Deserialize(prosody::Serialize(s)));
  }
}
BENCHMARK(BM_SerializeRoundTrip);

}  // namespace

BENCHMARK_MAIN();
