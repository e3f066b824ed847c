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

#include "cli.h"

#include <cstdlib>
#include <fstream>
#include <iterator>
#include <sstream>

#include "CLI11.hpp"
#include "plot.h"
#include "prosody/error.h"
#include "prosody/lexicon.h"
#include "prosody/mandarin.h"
#include "prosody/markup.h"
#include "prosody/policy.h"
#include "prosody/schedule.h"
#include "prosody/transfer_rules.h"

#ifndef PROSODYC_DEFAULT_DATA_DIR
#define PROSODYC_DEFAULT_DATA_DIR "data"
#endif

namespace prosody::tools {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string Slurp(std::istream& in) {
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

// Inline text, or the contents of `in` for "-".
std::string ReadInput(const std::string& arg, std::istream& in) {
  std::string text = arg == "-" ? Slurp(in) : arg;
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) {
    text.pop_back();
  }
  if (text.find_first_not_of(" \t\r\n") == std::string::npos) {
    throw UsageError("empty input");
  }
  return text;
}

std::string ReadFile(const std::string& path, std::istream& in) {
  if (path == "-") return Slurp(in);
  std::ifstream file(path, std::ios::binary);
  if (!file) throw Error(ErrorCode::kIoError, "cannot open " + path);
  return Slurp(file);
}

void Emit(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw Error(ErrorCode::kIoError, "cannot write " + path);
  file << text;
}

std::string Or(const std::string& value, const std::string& fallback) {
  return value.empty() ? fallback : value;
}

struct EffectsArgs {
  std::string text, lexicon, mappings, acronyms, policy, output;
  std::vector<std::string> overrides;
  bool spans = false;
};

struct TransferArgs {
  std::string language, ipa, rules, output;
  bool trace = false;
};

struct MandarinArgs {
  std::string pinyin, positional, rules, output;
  int subdivisions = kDefaultSubdivisions;
  double max_jump = kDefaultMaxJump;
  double word_pause = kDefaultWordPause;
  bool no_smooth = false;
};

struct AlignArgs {
  std::string word, phones, mappings;
};

struct LintArgs {
  std::string dict, mappings;
  int limit = 0;
};

struct PlotArgs {
  std::string input, format = "ascii", output;
};

int RunEffects(const EffectsArgs& a, std::istream& in, std::ostream& out) {
  const std::string data = DataDir();
  const std::string text = ReadInput(a.text, in);
  EffectPolicy policy =
      a.policy.empty() ? EffectPolicy{} : LoadPolicyFile(a.policy);
  for (const auto& kv : a.overrides) {
    auto eq = kv.find('=');
    if (eq == std::string::npos) throw UsageError("--set expects key=value");
    SetPolicyValue(policy, kv.substr(0, eq), kv.substr(eq + 1));
  }
  ValidatePolicy(policy);

  Lexicon lexicon =
      LoadCmuDictFile(Or(a.lexicon, data + "/english/sample.dict"));
  MappingSet mappings =
      LoadMappingsFile(Or(a.mappings, data + "/english/mappings.tsv"));
  MarkupOptions options;
  options.lexicon = &lexicon;
  options.acronyms =
      LoadAcronymsFile(Or(a.acronyms, data + "/english/acronyms.txt"));
  MarkupResult markup = ParseMarkup(text, options);

  if (a.spans) {
    std::ostringstream s;
    s << markup.clean_text << "\n";
    for (const auto& e : markup.effects) {
      s << EffectKindName(e.kind) << " [" << e.char_start << ", " << e.char_end
        << ") x" << e.magnitude;
      if (e.run_offset) s << " @" << e.run_offset;
      s << "  \"" << markup.clean_text.substr(e.char_start, e.char_end - e.char_start)
        << "\"\n";
    }
    Emit(s.str(), a.output, out);
    return kExitOk;
  }
  ProsodySchedule schedule = BuildEnglish(markup, lexicon, mappings, policy);
  schedule.source_text = text;
  Emit(Serialize(schedule), a.output, out);
  return kExitOk;
}

int RunTransfer(const TransferArgs& a, std::istream& in, std::ostream& out) {
  const Language language = *ParseLanguage(a.language);
  const std::string ipa = ReadInput(a.ipa, in);
  RuleSet rules = LoadRulesFile(
      Or(a.rules, DataDir() + "/rules/" + a.language + ".rules"), language);
  std::vector<Symbol> symbols = TokenizeIpa(ipa, rules);
  RuleApplication app = ApplyRulesTraced(symbols, rules);
  if (app.phones.empty()) throw Error(ErrorCode::kEmptyText, "no phones");
  if (a.trace) {
    std::ostringstream s;
    for (const auto& f : app.firings) {
      std::string src;
      for (std::size_t k = f.source_begin; k < f.source_end; ++k) {
        if (!src.empty()) src += ' ';
        src += symbols[k].Display();
      }
      s << (f.rule < 0 ? std::string("-")
                       : "line " + std::to_string(rules.rules()[static_cast<std::size_t>(f.rule)].line))
        << "\t" << src << "\t->";
      for (std::size_t k = f.phone_begin; k < f.phone_end; ++k) {
        s << " " << app.phones[k].symbol;
      }
      s << "\n";
    }
    Emit(s.str(), a.output, out);
    return kExitOk;
  }
  Emit(Serialize(FromAnnotated(std::span<const AnnotatedPhone>(app.phones),
                               language, ipa)),
       a.output, out);
  return kExitOk;
}

int RunMandarin(const MandarinArgs& a, std::istream& in, std::ostream& out) {
  if (!a.pinyin.empty() && !a.positional.empty()) {
    throw UsageError("give the pinyin once, as --pinyin or positionally");
  }
  const std::string text = ReadInput(Or(a.pinyin, a.positional), in);
  RuleSet rules =
      LoadRulesFile(Or(a.rules, DataDir() + "/rules/cmn.rules"), Language::kCmn);
  MandarinOptions options;
  options.subdivisions = a.subdivisions;
  options.max_jump = a.max_jump;
  options.word_pause = a.word_pause;
  options.smooth = !a.no_smooth;
  std::vector<PlannedPhone> plan = CompileMandarin(text, rules, options);
  Emit(Serialize(FromAnnotated(std::span<const PlannedPhone>(plan),
                               Language::kCmn, text)),
       a.output, out);
  return kExitOk;
}

int RunAlign(const AlignArgs& a, std::ostream& out) {
  if (a.word.empty() || a.phones.find_first_not_of(' ') == std::string::npos) {
    throw UsageError("empty input");
  }
  MappingSet mappings =
      LoadMappingsFile(Or(a.mappings, DataDir() + "/english/mappings.tsv"));
  PhoneSeq phones;
  for (const auto& p : SplitPhones(a.phones)) {
    if (!IsArpabet(StripStress(p))) {
      throw Error(ErrorCode::kUnknownSymbol, "'" + p + "'");
    }
    phones.push_back(StripStress(p));
  }
  std::string word;
  for (char c : a.word) {
    word += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  }
  Alignment alignment = Align(word, phones, mappings);
  out << FormatPairs(alignment) << "\n" << "cost " << alignment.cost << "\n";
  return kExitOk;
}

int RunLint(const LintArgs& a, std::ostream& out) {
  const std::string data = DataDir();
  Lexicon lexicon = LoadCmuDictFile(Or(a.dict, data + "/english/sample.dict"));
  MappingSet mappings =
      LoadMappingsFile(Or(a.mappings, data + "/english/mappings.tsv"));
  std::vector<LintFinding> findings = LintDictionary(lexicon, mappings);
  std::size_t shown = 0;
  for (const auto& f : findings) {
    if (a.limit > 0 && shown == static_cast<std::size_t>(a.limit)) break;
    std::string upper = f.word;
    for (auto& c : upper) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
    out << upper << "\t" << JoinPhones(f.pronunciation) << "\tcost " << f.cost
        << "\t" << FormatPairs(f.alignment) << "\n";
    ++shown;
  }
  out << "# " << findings.size() << " of " << lexicon.size()
      << " words flagged\n";
  return kExitOk;
}

int RunPlot(const PlotArgs& a, std::istream& in, std::ostream& out) {
  ProsodySchedule schedule = Deserialize(ReadFile(a.input, in));
  Emit(a.format == "svg" ? PlotSvg(schedule) : PlotAscii(schedule), a.output,
       out);
  return kExitOk;
}

}  // namespace

std::string DataDir() {
  if (const char* env = std::getenv("PROSODYC_DATA_DIR"); env && *env) {
    return env;
  }
  return PROSODYC_DEFAULT_DATA_DIR;
}

int RunCli(const std::vector<std::string>& args, std::istream& in,
           std::ostream& out, std::ostream& err) {
  CLI::App app{"Compile prosody markup, IPA and pinyin into DPE schedules",
               "prosodyc"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "prosodyc 0.1.0");

  EffectsArgs effects;
  auto* fx = app.add_subcommand("effects", "English text with markup -> schedule");
  fx->add_option("text", effects.text, "Text, or - for stdin")->required();
  fx->add_option("--lexicon", effects.lexicon, "CMU-format dictionary");
  fx->add_option("--mappings", effects.mappings, "Grapheme-phoneme mappings");
  fx->add_option("--acronyms", effects.acronyms, "Words whose capitals are not emphasis");
  fx->add_option("--policy", effects.policy, "Policy file (key = value)");
  fx->add_option("--set", effects.overrides, "Policy override key=value");
  fx->add_flag("--spans", effects.spans, "Print clean text and effect spans");
  fx->add_option("-o,--output", effects.output, "Output file");

  TransferArgs transfer;
  auto* tr = app.add_subcommand("transfer", "IPA (de/hu/es) -> schedule");
  tr->add_option("--lang", transfer.language, "Source language")
      ->required()
      ->check(CLI::IsMember({"de", "hu", "es"}));
  tr->add_option("ipa", transfer.ipa, "IPA text, or - for stdin")->required();
  tr->add_option("--rules", transfer.rules, "Rule file");
  tr->add_flag("--trace", transfer.trace, "Print the rule that produced each phone group");
  tr->add_option("-o,--output", transfer.output, "Output file");

  MandarinArgs mandarin;
  auto* md = app.add_subcommand("mandarin", "Toned pinyin -> schedule");
  md->add_option("--pinyin", mandarin.pinyin, "Pinyin, e.g. \"ni3hao3 ma5\"");
  md->add_option("text", mandarin.positional, "Pinyin, or - for stdin");
  md->add_option("--rules", mandarin.rules, "Rule file");
  md->add_option("--subdivisions", mandarin.subdivisions, "Nucleus subphonemes")
      ->check(CLI::Range(2, 64));
  md->add_option("--max-jump", mandarin.max_jump, "Largest pitch step between syllables")
      ->check(CLI::PositiveNumber);
  md->add_option("--word-pause", mandarin.word_pause, "Pause duration between words")
      ->check(CLI::NonNegativeNumber);
  md->add_flag("--no-smooth", mandarin.no_smooth, "Skip boundary smoothing");
  md->add_option("-o,--output", mandarin.output, "Output file");

  AlignArgs align;
  auto* al = app.add_subcommand("align", "Align a word with a pronunciation");
  al->add_option("--word", align.word, "Spelling")->required();
  al->add_option("--phones", align.phones, "ARPAbet phones, space separated")
      ->required();
  al->add_option("--mappings", align.mappings, "Grapheme-phoneme mappings");

  LintArgs lint;
  auto* li = app.add_subcommand("lint", "Report dictionary entries that align badly");
  li->add_option("dict", lint.dict, "CMU-format dictionary");
  li->add_option("--mappings", lint.mappings, "Grapheme-phoneme mappings");
  li->add_option("--limit", lint.limit, "Show at most N findings")
      ->check(CLI::NonNegativeNumber);

  PlotArgs plot;
  auto* pl = app.add_subcommand("plot", "Draw the pitch contour of a schedule");
  pl->add_option("schedule", plot.input, "Schedule file, or - for stdin")
      ->required();
  pl->add_option("--format", plot.format, "ascii or svg")
      ->check(CLI::IsMember({"ascii", "svg"}));
  pl->add_option("-o,--output", plot.output, "Output file");

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (fx->parsed()) return RunEffects(effects, in, out);
    if (tr->parsed()) return RunTransfer(transfer, in, out);
    if (md->parsed()) return RunMandarin(mandarin, in, out);
    if (al->parsed()) return RunAlign(align, out);
    if (li->parsed()) return RunLint(lint, out);
    if (pl->parsed()) return RunPlot(plot, in, out);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitDomainError;
  }
  return kExitUsage;
}

}  // namespace prosody::tools
