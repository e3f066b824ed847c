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

#include "plot.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <vector>

namespace prosody::tools {

namespace {

struct Sample {
  std::string symbol;
  bool first;  // first subphoneme of its entry
  double duration;
  double pitch;
};

std::vector<Sample> Flatten(const ProsodySchedule& s) {
  std::vector<Sample> out;
  for (const auto& e : s.entries) {
    for (int k = 0; k < e.repeat; ++k) {
      const auto i = static_cast<std::size_t>(k);
      out.push_back({e.symbol, k == 0, e.duration_scale[i], e.pitch_offset[i]});
    }
  }
  return out;
}

double Range(const std::vector<Sample>& samples) {
  double r = 2.0;
  for (const auto& s : samples) r = std::max(r, std::abs(s.pitch));
  return std::ceil(r * 2.0) / 2.0;
}

std::string Fmt(double v, const char* spec = "%.2f") {
  char buf[32];
  std::snprintf(buf, sizeof(buf), spec, v);
  return buf;
}

std::string Escape(const std::string& text) {
  std::string out;
  for (char c : text) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

}  // namespace

std::string PlotAscii(const ProsodySchedule& schedule) {
  const auto samples = Flatten(schedule);
  const double range = Range(samples);
  const int rows = static_cast<int>(range * 2.0) * 2 + 1;
  constexpr int kColumn = 3;
  std::string out;
  for (int r = 0; r < rows; ++r) {
    const double level = range - 0.5 * r;
    std::string line = Fmt(level, "%+5.1f") + " |";
    for (const auto& s : samples) {
      const bool here = std::abs(s.pitch - level) <= 0.25 &&
                        !(s.pitch - level == -0.25);
      std::string cell(kColumn, level == 0.0 ? '-' : ' ');
      if (here) cell[1] = s.duration == 0.0 ? 'o' : '*';
      line += cell;
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out += line + "\n";
  }
  std::string labels = "       ";
  for (const auto& s : samples) {
    std::string cell = s.first ? s.symbol.substr(0, kColumn - 1) : "";
    cell.resize(kColumn, ' ');
    labels += cell;
  }
  while (!labels.empty() && labels.back() == ' ') labels.pop_back();
  out += labels + "\n";
  return out;
}

std::string PlotSvg(const ProsodySchedule& schedule) {
  const auto samples = Flatten(schedule);
  const double range = Range(samples);
  constexpr double kUnit = 40.0;     // px per duration unit
  constexpr double kMinWidth = 6.0;  // zero-duration phones
  constexpr double kLeft = 50.0, kTop = 20.0, kPlotH = 200.0, kBottom = 40.0;

  double width = 0.0;
  for (const auto& s : samples) width += std::max(kMinWidth, s.duration * kUnit);
  const double total_w = kLeft + width + 20.0;
  const double total_h = kTop + kPlotH + kBottom;
  auto y = [&](double p) { return kTop + (range - p) / (2.0 * range) * kPlotH; };

  std::string out;
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + Fmt(total_w, "%.0f") +
         "\" height=\"" + Fmt(total_h, "%.0f") + "\" font-family=\"monospace\" " +
         "font-size=\"11\">\n";
  out += "  <title>" + Escape(schedule.source_text) + "</title>\n";
  for (double p = -range; p <= range + 1e-9; p += 1.0) {
    out += "  <line x1=\"" + Fmt(kLeft) + "\" x2=\"" + Fmt(kLeft + width) +
           "\" y1=\"" + Fmt(y(p)) + "\" y2=\"" + Fmt(y(p)) +
           "\" stroke=\"" + (p == 0.0 ? "#888" : "#ddd") + "\"/>\n";
    out += "  <text x=\"4\" y=\"" + Fmt(y(p) + 4) + "\">" + Fmt(p, "%+.0f") +
           "</text>\n";
  }
  std::string points;
  double x = kLeft;
  for (const auto& s : samples) {
    const double w = std::max(kMinWidth, s.duration * kUnit);
    if (s.symbol != ",") {
      points += Fmt(x) + "," + Fmt(y(s.pitch)) + " " + Fmt(x + w) + "," +
                Fmt(y(s.pitch)) + " ";
    }
    if (s.first) {
      out += "  <line x1=\"" + Fmt(x) + "\" x2=\"" + Fmt(x) + "\" y1=\"" +
             Fmt(kTop) + "\" y2=\"" + Fmt(kTop + kPlotH) +
             "\" stroke=\"#eee\"/>\n";
      out += "  <text x=\"" + Fmt(x + 1) + "\" y=\"" + Fmt(kTop + kPlotH + 16) +
             "\">" + Escape(s.symbol) + "</text>\n";
    }
    x += w;
  }
  if (!points.empty()) points.pop_back();
  out += "  <polyline fill=\"none\" stroke=\"#c33\" stroke-width=\"2\" points=\"" +
         points + "\"/>\n";
  out += "</svg>\n";
  return out;
}

}  // namespace prosody::tools
