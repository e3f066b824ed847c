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

#include "prosody/transfer_rules.h"

#include <algorithm>
#include <cstdio>
#include <fstream>

#include "prosody/arpabet.h"
#include "prosody/error.h"
#include "text_util.h"

namespace prosody {

namespace {

constexpr std::string_view kStressMark = "ˈ";
constexpr std::string_view kSecondaryStress = "ˌ";
constexpr std::string_view kLengthMark = "ː";
constexpr std::string_view kBoundaryMark = "‖";

[[noreturn]] void Malformed(int line, const std::string& why) {
  throw Error(ErrorCode::kMalformedRule,
              "line " + std::to_string(line) + ": " + why);
}

SourceToken ParseSourceToken(std::string_view text, int line) {
  SourceToken token;
  if (text == ".") {
    token.kind = SymbolKind::kSyllableBreak;
    token.text = ".";
    return token;
  }
  if (text == kBoundaryMark) {
    token.kind = SymbolKind::kWordBoundary;
    token.text = std::string(kBoundaryMark);
    return token;
  }
  if (text.starts_with(kStressMark)) {
    token.require_stress = true;
    text.remove_prefix(kStressMark.size());
  }
  if (text.ends_with(kLengthMark)) {
    token.require_long = true;
    text.remove_suffix(kLengthMark.size());
  } else if (text.size() > 1 && text.back() == ':') {
    token.require_long = true;
    text.remove_suffix(1);
  }
  if (text.empty()) Malformed(line, "empty source symbol");
  token.text = std::string(text);
  return token;
}

ContextPredicate ParsePredicate(std::string_view text, int line) {
  ContextPredicate pred;
  if (text.empty()) return pred;
  if (text == "#") {
    pred.kind = ContextPredicate::Kind::kBoundary;
    return pred;
  }
  if (text == ".") {
    pred.kind = ContextPredicate::Kind::kBreak;
    return pred;
  }
  if (text.starts_with(kStressMark)) {
    pred.require_stress = true;
    text.remove_prefix(kStressMark.size());
    if (text.empty()) {
      pred.kind = ContextPredicate::Kind::kStressed;
      return pred;
    }
  }
  if (text == "V") {
    pred.kind = ContextPredicate::Kind::kVowel;
  } else if (text == "C") {
    pred.kind = ContextPredicate::Kind::kConsonant;
  } else if (text.front() == '{') {
    if (text.back() != '}') Malformed(line, "unterminated set");
    pred.kind = ContextPredicate::Kind::kSet;
    std::string_view body = text.substr(1, text.size() - 2);
    std::size_t start = 0;
    while (start <= body.size()) {
      auto comma = body.find(',', start);
      auto item = internal::Trim(body.substr(
          start, comma == std::string_view::npos ? body.size() - start
                                                 : comma - start));
      if (item.empty()) Malformed(line, "empty set member");
      pred.members.insert(std::string(item));
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
  } else {
    pred.kind = ContextPredicate::Kind::kSet;
    pred.members.insert(std::string(text));
  }
  return pred;
}

// Whitespace inside [...] is dropped so "D=[0.7, 0, 0.7]" stays one token.
std::string CompactBrackets(std::string_view text) {
  std::string out;
  int depth = 0;
  for (char c : text) {
    if (c == '[') ++depth;
    if (c == ']') --depth;
    if (depth > 0 && internal::IsSpace(c)) continue;
    out += c;
  }
  return out;
}

std::vector<double> ParseVector(std::string_view text, int line) {
  std::vector<double> out;
  if (!text.empty() && text.front() == '[') {
    if (text.back() != ']') Malformed(line, "unterminated list");
    text = text.substr(1, text.size() - 2);
  }
  std::size_t start = 0;
  while (true) {
    auto comma = text.find(',', start);
    auto item = text.substr(start, comma == std::string_view::npos
                                       ? text.size() - start
                                       : comma - start);
    auto value = internal::ParseDouble(item);
    if (!value) Malformed(line, "bad number '" + std::string(item) + "'");
    out.push_back(*value);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

double ParseField(std::string_view text, double fallback, int line) {
  if (text.empty()) return fallback;
  auto value = internal::ParseDouble(text);
  if (!value) Malformed(line, "bad number '" + std::string(text) + "'");
  return *value;
}

int Specificity(const MappingRule& rule) {
  int s = 0;
  if (rule.left.kind != ContextPredicate::Kind::kAny) ++s;
  if (rule.right.kind != ContextPredicate::Kind::kAny) ++s;
  for (const auto& t : rule.source) {
    s += (t.require_stress ? 1 : 0) + (t.require_long ? 1 : 0);
  }
  return s;
}

MappingRule ParseRule(std::string_view body, int line, double default_duration) {
  auto arrow = body.find("->");
  if (arrow == std::string_view::npos) Malformed(line, "missing '->'");
  std::string_view lhs = internal::Trim(body.substr(0, arrow));
  std::string rhs = CompactBrackets(internal::Trim(body.substr(arrow + 2)));

  MappingRule rule;
  rule.line = line;

  std::string_view source_text = lhs;
  if (auto bar = lhs.find('|'); bar != std::string_view::npos) {
    source_text = internal::Trim(lhs.substr(0, bar));
    auto ctx = internal::SplitWs(lhs.substr(bar + 1));
    auto slot = std::find(ctx.begin(), ctx.end(), "_");
    if (slot == ctx.end() || std::count(ctx.begin(), ctx.end(), "_") != 1) {
      Malformed(line, "context needs exactly one '_'");
    }
    const auto left_n = slot - ctx.begin();
    const auto right_n = ctx.end() - slot - 1;
    if (left_n > 1 || right_n > 1) {
      Malformed(line, "contexts look at one neighbour only");
    }
    if (left_n == 1) rule.left = ParsePredicate(ctx.front(), line);
    if (right_n == 1) rule.right = ParsePredicate(ctx.back(), line);
  }
  for (auto tok : internal::SplitWs(source_text)) {
    rule.source.push_back(ParseSourceToken(tok, line));
  }
  if (rule.source.empty()) Malformed(line, "empty source");

  std::optional<std::vector<double>> d_vec, p_vec, e_vec;
  bool colon_fields = false;
  std::vector<std::string_view> tokens = internal::SplitWs(rhs);
  for (std::size_t k = 0; k < tokens.size(); ++k) {
    std::string_view tok = tokens[k];
    if (tok.front() == '@') {
      if (k + 1 != tokens.size()) Malformed(line, "priority must come last");
      auto prio = internal::ParseInt(tok.substr(1));
      if (!prio) Malformed(line, "bad priority");
      rule.priority = *prio;
      continue;
    }
    if (tok.size() > 2 && tok[1] == '=' &&
        (tok[0] == 'D' || tok[0] == 'P' || tok[0] == 'E')) {
      auto& slot = tok[0] == 'D' ? d_vec : tok[0] == 'P' ? p_vec : e_vec;
      if (slot) Malformed(line, "duplicate " + std::string(1, tok[0]) + "=");
      slot = ParseVector(tok.substr(2), line);
      continue;
    }
    if (d_vec || p_vec || e_vec) Malformed(line, "target after D/P/E lists");
    // "SYM:D:P:E"; a leading "," is the pause symbol, not a separator.
    std::vector<std::string_view> fields;
    std::size_t start = tok.front() == ',' ? 1 : 0;
    std::size_t colon = tok.find(':', start);
    fields.push_back(tok.substr(0, colon));
    while (colon != std::string_view::npos) {
      start = colon + 1;
      colon = tok.find(':', start);
      fields.push_back(tok.substr(start, colon == std::string_view::npos
                                             ? std::string_view::npos
                                             : colon - start));
    }
    if (fields.size() > 4) Malformed(line, "too many ':' fields");
    if (fields.size() > 1) colon_fields = true;
    std::string symbol(fields[0]);
    if (!IsScheduleSymbol(symbol)) {
      throw Error(ErrorCode::kUnknownArpabet,
                  "'" + symbol + "' on line " + std::to_string(line));
    }
    rule.targets.push_back(symbol);
    rule.durations.push_back(
        ParseField(fields.size() > 1 ? fields[1] : "", default_duration, line));
    rule.pitch_changes.push_back(
        ParseField(fields.size() > 2 ? fields[2] : "", 0.0, line));
    rule.energy_changes.push_back(
        ParseField(fields.size() > 3 ? fields[3] : "", 0.0, line));
  }
  if (rule.targets.empty()) Malformed(line, "no targets");
  if (colon_fields && (d_vec || p_vec || e_vec)) {
    Malformed(line, "mixes T:D:P:E fields with D/P/E lists");
  }
  auto apply = [&](const std::optional<std::vector<double>>& v,
                   std::vector<double>& dst) {
    if (!v) return;
    if (v->size() != rule.targets.size()) {
      throw Error(ErrorCode::kLengthMismatch,
                  "line " + std::to_string(line) + ": " +
                      std::to_string(rule.targets.size()) + " targets, " +
                      std::to_string(v->size()) + " values");
    }
    dst = *v;
  };
  apply(d_vec, rule.durations);
  apply(p_vec, rule.pitch_changes);
  apply(e_vec, rule.energy_changes);
  for (double d : rule.durations) {
    if (d < 0) Malformed(line, "negative duration");
  }
  return rule;
}

}  // namespace

std::string Symbol::Display() const {
  std::string out;
  if (stressed) out += kStressMark;
  out += text;
  if (long_mark) out += kLengthMark;
  return out;
}

bool RuleSet::IsVowel(std::string_view segment) const {
  return vowels_.count(segment) > 0;
}

RuleSet LoadRules(std::istream& in, Language language) {
  RuleSet set;
  set.language_ = language;
  std::set<std::string, std::less<>> alphabet;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view body = internal::Trim(line);
    if (body.empty() || body.front() == '#') continue;
    if (body.front() == '%') {
      auto words = internal::SplitWs(body);
      const auto& name = words.front();
      if (name == "%default_duration" && words.size() == 2) {
        auto d = internal::ParseDouble(words[1]);
        if (!d || *d < 0) Malformed(line_no, "bad default duration");
        set.default_duration_ = *d;
      } else if (name == "%vowels" || name == "%alphabet") {
        for (std::size_t k = 1; k < words.size(); ++k) {
          alphabet.insert(std::string(words[k]));
          if (name == "%vowels") set.vowels_.insert(std::string(words[k]));
        }
      } else if (name == "%language" && words.size() == 2) {
        if (words[1] != LanguageCode(language)) {
          Malformed(line_no, "rule file is for '" + std::string(words[1]) +
                                 "', not '" +
                                 std::string(LanguageCode(language)) + "'");
        }
      } else {
        Malformed(line_no, "unknown directive " + std::string(name));
      }
      continue;
    }
    MappingRule rule = ParseRule(body, line_no, set.default_duration_);
    for (const auto& t : rule.source) {
      if (t.kind == SymbolKind::kSegment) alphabet.insert(t.text);
    }
    set.rules_.push_back(std::move(rule));
  }
  std::stable_sort(set.rules_.begin(), set.rules_.end(),
                   [](const MappingRule& a, const MappingRule& b) {
                     if (a.priority != b.priority) return a.priority > b.priority;
                     if (a.source.size() != b.source.size()) {
                       return a.source.size() > b.source.size();
                     }
                     return Specificity(a) > Specificity(b);
                   });
  set.alphabet_.assign(alphabet.begin(), alphabet.end());
  std::stable_sort(set.alphabet_.begin(), set.alphabet_.end(),
                   [](const std::string& a, const std::string& b) {
                     return a.size() > b.size();
                   });
  return set;
}

RuleSet LoadRulesFile(const std::string& path, Language language) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIoError, "cannot open " + path);
  return LoadRules(in, language);
}

std::vector<Symbol> TokenizeIpa(std::string_view text, const RuleSet& rules) {
  std::vector<Symbol> out;
  bool pending_stress = false;
  bool pending_boundary = false;
  std::size_t codepoint = 0;
  std::size_t i = 0;
  auto advance = [&](std::size_t bytes) {
    for (std::size_t k = 0; k < bytes; ++k) {
      if ((static_cast<unsigned char>(text[i + k]) & 0xC0) != 0x80) ++codepoint;
    }
    i += bytes;
  };
  while (i < text.size()) {
    std::string_view rest = text.substr(i);
    if (internal::IsSpace(rest.front()) || rest.starts_with(kBoundaryMark)) {
      if (!out.empty()) pending_boundary = true;
      advance(internal::IsSpace(rest.front()) ? 1 : kBoundaryMark.size());
      continue;
    }
    if (pending_boundary) {
      if (out.back().kind != SymbolKind::kWordBoundary) {
        out.push_back(Symbol::Boundary());
      }
      pending_boundary = false;
    }
    if (rest.starts_with(kStressMark)) {
      pending_stress = true;
      advance(kStressMark.size());
      continue;
    }
    if (rest.starts_with(kSecondaryStress)) {
      advance(kSecondaryStress.size());
      continue;
    }
    if (rest.starts_with(kLengthMark) || rest.front() == ':') {
      if (out.empty() || out.back().kind != SymbolKind::kSegment) {
        throw Error(ErrorCode::kUnknownIpaSymbol,
                    "length mark without a segment at " +
                        std::to_string(codepoint));
      }
      out.back().long_mark = true;
      advance(rest.front() == ':' ? 1 : kLengthMark.size());
      continue;
    }
    if (rest.front() == '.') {
      out.push_back(Symbol::Break());
      advance(1);
      continue;
    }
    const std::string* match = nullptr;
    for (const auto& a : rules.alphabet()) {
      if (rest.starts_with(a)) {
        match = &a;
        break;
      }
    }
    if (match == nullptr) {
      const std::size_t len = std::min(
          rest.size(), internal::Utf8Length(static_cast<unsigned char>(rest[0])));
      const std::string glyph(rest.substr(0, len));
      char hex[16];
      std::snprintf(hex, sizeof hex, "U+%04X", internal::DecodeCodepoint(glyph));
      throw Error(ErrorCode::kUnknownIpaSymbol,
                  std::string(hex) + " '" + glyph + "' at " +
                      std::to_string(codepoint));
    }
    out.push_back(Symbol::Segment(*match, pending_stress));
    pending_stress = false;
    advance(match->size());
  }
  return out;
}

namespace {

bool TokenMatches(const SourceToken& token, const Symbol& sym) {
  if (token.kind != sym.kind) return false;
  if (token.kind != SymbolKind::kSegment) return true;
  if (token.text != sym.text) return false;
  if (token.require_stress && !sym.stressed) return false;
  if (token.require_long && !sym.long_mark) return false;
  return true;
}

bool PredicateHolds(const ContextPredicate& pred, const Symbol* sym,
                    const RuleSet& rules) {
  using Kind = ContextPredicate::Kind;
  switch (pred.kind) {
    case Kind::kAny:
      return true;
    case Kind::kBoundary:
      return sym == nullptr || sym->kind == SymbolKind::kWordBoundary;
    case Kind::kBreak:
      return sym != nullptr && sym->kind == SymbolKind::kSyllableBreak;
    default:
      break;
  }
  if (sym == nullptr || sym->kind != SymbolKind::kSegment) return false;
  if (pred.require_stress && !sym->stressed) return false;
  switch (pred.kind) {
    case Kind::kVowel: return rules.IsVowel(sym->text);
    case Kind::kConsonant: return !rules.IsVowel(sym->text);
    case Kind::kStressed: return sym->stressed;
    case Kind::kSet: return pred.members.count(sym->text) > 0;
    default: return false;
  }
}

bool RuleMatches(const MappingRule& rule, std::span<const Symbol> symbols,
                 std::size_t pos, const RuleSet& rules) {
  if (pos + rule.source.size() > symbols.size()) return false;
  for (std::size_t k = 0; k < rule.source.size(); ++k) {
    if (!TokenMatches(rule.source[k], symbols[pos + k])) return false;
  }
  const Symbol* left = pos > 0 ? &symbols[pos - 1] : nullptr;
  const std::size_t after = pos + rule.source.size();
  const Symbol* right = after < symbols.size() ? &symbols[after] : nullptr;
  return PredicateHolds(rule.left, left, rules) &&
         PredicateHolds(rule.right, right, rules);
}

}  // namespace

RuleApplication ApplyRulesTraced(std::span<const Symbol> symbols,
                                 const RuleSet& rules) {
  RuleApplication out;
  std::size_t pos = 0;
  while (pos < symbols.size()) {
    int fired = -1;
    for (std::size_t r = 0; r < rules.rules().size(); ++r) {
      if (RuleMatches(rules.rules()[r], symbols, pos, rules)) {
        fired = static_cast<int>(r);
        break;
      }
    }
    RuleFiring firing;
    firing.rule = fired;
    firing.source_begin = pos;
    firing.phone_begin = out.phones.size();
    if (fired < 0) {
      if (symbols[pos].kind == SymbolKind::kSegment) {
        throw Error(ErrorCode::kNoRuleMatches,
                    "'" + symbols[pos].Display() + "' at position " +
                        std::to_string(pos));
      }
      ++pos;
    } else {
      const MappingRule& rule = rules.rules()[static_cast<std::size_t>(fired)];
      for (std::size_t k = 0; k < rule.targets.size(); ++k) {
        AnnotatedPhone phone;
        phone.symbol = rule.targets[k];
        phone.duration_factor = rule.durations[k];
        phone.pitch_change = rule.pitch_changes[k];
        phone.energy_change = rule.energy_changes[k];
        out.phones.push_back(std::move(phone));
      }
      pos += rule.source.size();
    }
    firing.source_end = pos;
    firing.phone_end = out.phones.size();
    out.firings.push_back(firing);
  }
  return out;
}

std::vector<AnnotatedPhone> ApplyRules(std::span<const Symbol> symbols,
                                       const RuleSet& rules) {
  return ApplyRulesTraced(symbols, rules).phones;
}

}  // namespace prosody
