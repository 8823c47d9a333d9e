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

#include "zdgame/classic_strategies.hpp"

#include <array>

namespace zdgame {

NamedStrategy Wsls() { return {"wsls", MemoryOneStrategy(1, 0, 0, 1)}; }
NamedStrategy Allc() { return {"allc", MemoryOneStrategy(1, 1, 1, 1)}; }
NamedStrategy Alld() { return {"alld", MemoryOneStrategy(0, 0, 0, 0)}; }
NamedStrategy Tft() {
  return {"tft", MemoryOneStrategy(1, 0, 1, 0), /*used_in_experiments=*/false};
}

std::span<const NamedStrategy> StrategyRegistry() {
  static const std::array<NamedStrategy, 4> kRegistry = {Wsls(), Allc(),
                                                         Alld(), Tft()};
  return kRegistry;
}

std::optional<NamedStrategy> FindStrategy(std::string_view name) {
  for (const NamedStrategy& s : StrategyRegistry()) {
    if (s.name == name) return s;
  }
  return std::nullopt;
}

MemoryOneStrategy SampleRandomStrategy(std::mt19937_64& rng) {
  Vec4 q;
  for (double& qi : q) qi = UniformUnit(rng);
  return MemoryOneStrategy(q);
}

}  // namespace zdgame
