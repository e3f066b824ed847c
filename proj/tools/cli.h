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

#ifndef PROSODYC_TOOLS_CLI_H_
#define PROSODYC_TOOLS_CLI_H_

#include <istream>
#include <ostream>
#include <string>
#include <vector>

namespace prosody::tools {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomainError = 1;
inline constexpr int kExitUsage = 2;

// Runs `prosodyc` with argv[0] included. Domain errors are written to `err`
// as "error: Name: detail". "-" as an input argument reads `in`.
int RunCli(const std::vector<std::string>& args, std::istream& in,
           std::ostream& out, std::ostream& err);

// $PROSODYC_DATA_DIR, else the data directory of the source tree.
std::string DataDir();

}  // namespace prosody::tools

#endif  // PROSODYC_TOOLS_CLI_H_
