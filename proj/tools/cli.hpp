// Copyright 2026 The zdgame Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef ZDGAME_TOOLS_CLI_HPP_
#define ZDGAME_TOOLS_CLI_HPP_

#include <iosfwd>

#include "zdgame/zdgame.h"

namespace zdgame::cli {

// Exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitInfeasible = 1;  // infeasible or degenerate result
inline constexpr int kExitUsage = 2;       // bad arguments or configuration
inline constexpr int kExitIo = 3;
inline constexpr int kExitInternal = 4;

int ExitCodeFor(zdg_status status);

// Entry point of the `zdgame` tool, with injectable streams for tests.
int RunCli(int argc, const char* const* argv, std::ostream& out,
           std::ostream& err);

}  // namespace zdgame::cli

#endif  // ZDGAME_TOOLS_CLI_HPP_
