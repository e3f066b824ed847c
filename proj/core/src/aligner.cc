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

#include "prosody/aligner.h"

#include <algorithm>
#include <limits>

#include "prosody/error.h"

namespace prosody {

std::size_t Alignment::AllowedCount() const {
  return static_cast<std::size_t>(
      std::count_if(pairs.begin(), pairs.end(),
                    [](const AlignedPair& p) { return p.allowed; }));
}

std::string Alignment::Graphemes() const {
  std::string out;
  for (const auto& p : pairs) out += p.graphemes;
  return out;
}

PhoneSeq Alignment::Phones() const {
  PhoneSeq out;
  for (const auto& p : pairs) {
    out.insert(out.end(), p.phones.begin(), p.phones.end());
  }
  return out;
}

int PairCost(const AlignedPair& pair) {
  if (pair.allowed) return 0;
  return static_cast<int>(std::max(pair.graphemes.size(), pair.phones.size()));
}

namespace {

// One step of the DP: consume `g` graphemes and `p` phones from a cell.
struct Step {
  int g = 0;
  int p = 0;
  bool allowed = false;
};

struct Cell {
  int cost = std::numeric_limits<int>::max();
  int allowed = 0;
  int covered = 0;  // phones inside allowed pairs
  Step step;
};

class SuffixAligner {
 public:
  SuffixAligner(std::string_view graphemes, std::span<const std::string> phones,
                const MappingSet& mappings)
      : g_(graphemes),
        ph_(phones),
        map_(mappings),
        m_(static_cast<int>(graphemes.size())),
        n_(static_cast<int>(phones.size())),
        cells_(static_cast<std::size_t>((m_ + 1) * (n_ + 1))) {}

  Alignment Run() {
    At(m_, n_).cost = 0;
    for (int i = m_; i >= 0; --i) {
      for (int j = n_; j >= 0; --j) {
        if (i == m_ && j == n_) continue;
        Fill(i, j);
      }
    }
    Alignment out;
    out.cost = At(0, 0).cost;
    int i = 0;
    int j = 0;
    while (i < m_ || j < n_) {
      const Step& s = At(i, j).step;
      AlignedPair pair;
      pair.graphemes = std::string(g_.substr(static_cast<std::size_t>(i),
                                             static_cast<std::size_t>(s.g)));
      pair.phones.assign(ph_.begin() + j, ph_.begin() + j + s.p);
      pair.allowed = s.allowed;
      out.pairs.push_back(std::move(pair));
      i += s.g;
      j += s.p;
    }
    return out;
  }

 private:
  Cell& At(int i, int j) {
    return cells_[static_cast<std::size_t>(i * (n_ + 1) + j)];
  }

  bool PhonesMatch(int j, const PhoneSeq& want) const {
    if (j + static_cast<int>(want.size()) > n_) return false;
    return std::equal(want.begin(), want.end(), ph_.begin() + j);
  }

  void Consider(int i, int j, Step step) {
    const Cell& next = At(i + step.g, j + step.p);
    if (next.cost == std::numeric_limits<int>::max()) return;
    int cost = next.cost + (step.allowed ? 0 : std::max(step.g, step.p));
    int allowed = next.allowed + (step.allowed ? 1 : 0);
    int covered = next.covered + (step.allowed ? step.p : 0);
    Cell& cell = At(i, j);
    bool take = false;
    if (cost != cell.cost) {
      take = cost < cell.cost;
    } else if (allowed != cell.allowed) {
      take = allowed > cell.allowed;
    } else if (covered != cell.covered) {
      take = covered > cell.covered;
    } else {
      take = Precedes(i, j, step, cell.step);
    }
    if (take) {
      cell.cost = cost;
      cell.allowed = allowed;
      cell.covered = covered;
      cell.step = step;
    }
  }

  void Fill(int i, int j) {
    const int max_g = std::min<int>(static_cast<int>(map_.max_graphemes()),
                                    m_ - i);
    for (int a = 0; a <= max_g; ++a) {
      auto gs = g_.substr(static_cast<std::size_t>(i),
                          static_cast<std::size_t>(a));
      for (const auto& option : map_.PhonesFor(gs)) {
        if (a == 0 && option.empty()) continue;
        if (!PhonesMatch(j, option)) continue;
        Consider(i, j, {a, static_cast<int>(option.size()), true});
      }
    }
    if (i < m_ && j < n_ &&
        !map_.Contains(g_.substr(static_cast<std::size_t>(i), 1),
                       ph_.subspan(static_cast<std::size_t>(j), 1))) {
      Consider(i, j, {1, 1, false});
    }
    if (i < m_ &&
        !map_.Contains(g_.substr(static_cast<std::size_t>(i), 1), {})) {
      Consider(i, j, {1, 0, false});
    }
    if (j < n_ && !map_.Contains("", ph_.subspan(static_cast<std::size_t>(j), 1))) {
      Consider(i, j, {0, 1, false});
    }
  }

  // Pair sequence obtained by taking `first` at (i, j) and then following
  // the stored best steps.
  struct Span {
    int g;
    int j;  // phone start
    int p;
  };
  std::vector<Span> Chain(int i, int j, Step first) {
    std::vector<Span> out;
    out.push_back({first.g, j, first.p});
    i += first.g;
    j += first.p;
    while (i < m_ || j < n_) {
      const Step& s = At(i, j).step;
      out.push_back({s.g, j, s.p});
      i += s.g;
      j += s.p;
    }
    return out;
  }

  // Tie-break between two equal-cost, equal-allowed candidates starting at
  // (i, j). See the ordering documented on Align().
  bool Precedes(int i, int j, Step a, Step b) {
    if (a.g == b.g && a.p == b.p) return false;
    auto sa = Chain(i, j, a);
    auto sb = Chain(i, j, b);
    const std::size_t common = std::min(sa.size(), sb.size());
    for (std::size_t k = 0; k < common; ++k) {
      if (sa[k].p != sb[k].p) return sa[k].p > sb[k].p;
    }
    for (std::size_t k = 0; k < common; ++k) {
      if (sa[k].g != sb[k].g) return sa[k].g > sb[k].g;
    }
    // Equal prefixes fix both partitions, so only the length can differ.
    if (sa.size() != sb.size()) return sa.size() < sb.size();
    return false;
  }

  std::string_view g_;
  std::span<const std::string> ph_;
  const MappingSet& map_;
  int m_;
  int n_;
  std::vector<Cell> cells_;
};

}  // namespace

Alignment Align(std::string_view graphemes, std::span<const std::string> phones,
                const MappingSet& mappings) {
  return SuffixAligner(graphemes, phones, mappings).Run();
}

BestAlignment AlignBest(std::string_view graphemes,
                        std::span<const PhoneSeq> pronunciations,
                        const MappingSet& mappings) {
  BestAlignment best;
  bool have = false;
  for (std::size_t k = 0; k < pronunciations.size(); ++k) {
    Alignment a = Align(graphemes, pronunciations[k], mappings);
    if (!have || a.cost < best.alignment.cost) {
      best.pronunciation_index = k;
      best.alignment = std::move(a);
      have = true;
    }
  }
  return best;
}

std::vector<std::size_t> ProjectSpan(const Alignment& alignment,
                                     std::size_t start, std::size_t end) {
  std::size_t length = 0;
  for (const auto& p : alignment.pairs) length += p.graphemes.size();
  if (start >= end || end > length) {
    throw Error(ErrorCode::kRangeOutOfBounds,
                "[" + std::to_string(start) + ", " + std::to_string(end) +
                    ") in word of length " + std::to_string(length));
  }
  std::vector<std::size_t> out;
  std::size_t char_pos = 0;
  std::size_t phone_pos = 0;
  for (const auto& p : alignment.pairs) {
    const std::size_t g_end = char_pos + p.graphemes.size();
    if (!p.graphemes.empty() && char_pos < end && start < g_end) {
      for (std::size_t k = 0; k < p.phones.size(); ++k) {
        out.push_back(phone_pos + k);
      }
    }
    char_pos = g_end;
    phone_pos += p.phones.size();
  }
  return out;
}

std::string FormatPairs(const Alignment& alignment) {
  std::string out;
  for (const auto& p : alignment.pairs) {
    if (!out.empty()) out += ", ";
    out += p.graphemes.empty() ? "∅" : p.graphemes;
    out += "→";
    out += p.phones.empty() ? "∅" : JoinPhones(p.phones);
  }
  return out;
}

}  // namespace prosody
