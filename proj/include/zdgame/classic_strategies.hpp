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

#ifndef ZDGAME_CLASSIC_STRATEGIES_HPP_
#define ZDGAME_CLASSIC_STRATEGIES_HPP_

#include <optional>
#include <random>
#include <span>
#include <string>
#include <string_view>

#include "zdgame/game.hpp"

namespace zdgame {

struct NamedStrategy {
  std::string name;
  MemoryOneStrategy strategy;
  // False for entries kept for convenience that no experiment uses (tft).
  bool used_in_experiments = true;
};

// Win-stay lose-shift, (1, 0, 0, 1). A "win" is a round paying R or T, i.e.
// the owner's states CC and DC; after those the move is repeated.
NamedStrategy Wsls();
NamedStrategy Allc();
NamedStrategy Alld();
// Tit-for-tat, (1, 0, 1, 0).
NamedStrategy Tft();

std::span<const NamedStrategy> StrategyRegistry();
std::optional<NamedStrategy> FindStrategy(std::string_view name);

// 53-bit uniform in [0, 1) from one generator output.
inline double UniformUnit(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// Four independent uniforms in [0, 1), drawn in order q1..q4.
MemoryOneStrategy SampleRandomStrategy(std::mt19937_64& rng);

}  // namespace zdgame

#endif  // ZDGAME_CLASSIC_STRATEGIES_HPP_
