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

#ifndef ZDGAME_MATCH_HPP_
#define ZDGAME_MATCH_HPP_

#include <array>
#include <cstdint>

#include "zdgame/game.hpp"
#include "zdgame/markov.hpp"

namespace zdgame {

struct MatchOptions {
  // Outcome of the virtual round preceding round 1. It only conditions the
  // first move and is never scored.
  OutcomeState initial = OutcomeState::kCC;
  // Leading rounds played but excluded from the averages and counts.
  std::uint64_t burn_in = 0;
};

struct MatchResult {
  double sx = 0.0;
  double sy = 0.0;
  // Visits to CC, CD, DC, DD over the scored rounds.
  std::array<std::uint64_t, 4> state_counts{};
  // Standard errors of sx, sy. Batch means over 100 batches when at least
  // 1000 rounds are scored, otherwise the i.i.d. multinomial estimate from
  // the state counts.
  double se_x = 0.0;
  double se_y = 0.0;
};

// Plays `rounds` scored rounds. A pure function of its arguments: the
// generator is a std::mt19937_64 seeded with `seed`, each round draws X's
// uniform before Y's.
MatchResult SimulateMatch(const DecayedStrategy& px, const DecayedStrategy& qy,
                          const GamePayoffs& payoffs, std::uint64_t rounds,
                          std::uint64_t seed, const MatchOptions& options = {});

// Burn-in applied by the long-run fallback for chains without a unique
// stationary distribution: 10% of the scored rounds.
inline constexpr std::uint64_t kFallbackRounds = 100000;

// ExpectedPayoffs(), falling back to SimulateMatch() with kFallbackRounds
// scored rounds after a 10% burn-in when the game is degenerate. `degenerate`
// reports whether the fallback was taken.
PayoffPair LongRunPayoffs(const DecayedStrategy& px, const DecayedStrategy& qy,
                          const GamePayoffs& payoffs, std::uint64_t seed,
                          bool* degenerate);

}  // namespace zdgame

#endif  // ZDGAME_MATCH_HPP_
