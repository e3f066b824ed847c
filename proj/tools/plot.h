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

#ifndef PROSODYC_TOOLS_PLOT_H_
#define PROSODYC_TOOLS_PLOT_H_

#include <string>

#include "prosody/schedule.h"

namespace prosody::tools {

// Pitch offset per subphoneme, one column each, rows every 0.5 units.
// Zero-duration subphonemes are drawn with 'o' instead of '*'.
std::string PlotAscii(const ProsodySchedule& schedule);

// Same contour as a standalone SVG document. Segment widths follow the
// duration scales, with a floor so zero-duration phones stay visible.
std::string PlotSvg(const ProsodySchedule& schedule);

}  // namespace prosody::tools

#endif  // PROSODYC_TOOLS_PLOT_H_
