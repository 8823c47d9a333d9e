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

#ifndef ZDGAME_TOOLS_RUN_CONFIG_HPP_
#define ZDGAME_TOOLS_RUN_CONFIG_HPP_

// JSON experiment configuration for the `cloud` and `figure` commands.
//
//   {
//     "figure": 4,                      // preset 2..5, or
//     "strategy": "wsls",               // registry name / zd-set /
//                                       // zd-extortion / linear, or
//     "p": [1, 0, 0, 1],                // explicit X strategy
//     "zd": {"p1": 0.8, "p4": 0.1, "s": 0.5, "phi": 0.2,
//            "alpha": 0, "beta": 0, "gamma": 0},
//     "rstp": {"R": 1.5, "S": -1, "T": 3, "P": 0},   // at most one of
//     "rc": {"r": 6, "c": 4},                        // rstp / rc
//     "m": 1.0,
//     "n_opponents": 50000,
//     "mode": "analytic",               // or "simulated"
//     "rounds": 100000,
//     "seed": 7,
//     "workers": 0,
//     "out_dir": "fig4"
//   }
//
// Unknown keys are rejected.

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace zdgame::cli {

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct RstpBlock {
  double R = 0, S = 0, T = 0, P = 0;
  bool operator==(const RstpBlock&) const = default;
};

struct RcBlock {
  double r = 0, c = 0;
  bool operator==(const RcBlock&) const = default;
};

struct ZdBlock {
  std::optional<double> p1, p4, s, phi, alpha, beta, gamma;
  bool operator==(const ZdBlock&) const = default;
};

struct RunConfig {
  std::optional<int> figure;
  std::optional<std::string> strategy;
  std::optional<std::array<double, 4>> p;
  ZdBlock zd;
  std::optional<RstpBlock> rstp;
  std::optional<RcBlock> rc;
  double m = 1.0;
  std::uint64_t n_opponents = 50000;
  std::string mode = "analytic";
  std::uint64_t rounds = 100000;
  std::uint64_t seed = 0;
  unsigned workers = 0;
  std::optional<std::string> out_dir;

  bool operator==(const RunConfig&) const = default;
};

// Throws ConfigError with line/column for syntax errors and the offending key
// for schema errors. With `validate`, ValidateConfig() runs as well; pass
// false when command-line flags are merged in afterwards.
RunConfig ParseConfig(const std::string& json_text, bool validate = true);
RunConfig LoadConfig(const std::string& path, bool validate = true);

std::string ToJson(const RunConfig& config);

// Cross-field invariants: exactly one strategy source, at most one payoff
// block, m in (0,1], known mode/figure/strategy, required ZD parameters.
void ValidateConfig(const RunConfig& config);

}  // namespace zdgame::cli

#endif  // ZDGAME_TOOLS_RUN_CONFIG_HPP_
