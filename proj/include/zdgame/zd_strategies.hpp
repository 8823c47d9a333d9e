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

#ifndef ZDGAME_ZD_STRATEGIES_HPP_
#define ZDGAME_ZD_STRATEGIES_HPP_

// Zero-determinant strategy constructors.
//
// A memory-one strategy for X whose tilted vector
//   (p1 - 1, p2 - 1, m p3, m p4) = phi * (alpha S_X + beta S_Y + gamma 1)
// makes the second column of the determinant a multiple of any payoff
// combination f = alpha S_X + beta S_Y + gamma 1, so every opponent ends up
// with alpha s_X + beta s_Y + gamma = 0 in the long run.

#include <optional>
#include <utility>

#include "zdgame/game.hpp"

namespace zdgame {

struct ZDParams {
  double alpha = 0.0;
  double beta = 0.0;
  double gamma = 0.0;
  double phi = 0.0;
  double s = 0.0;
  // Fixed at P for extortion strategies.
  double reference_point = 0.0;
  double m = 1.0;

  bool operator==(const ZDParams&) const = default;
};

enum class ZDKind { kLinearGeneral, kEqualizer, kExtortion };

const char* ZDKindName(ZDKind k);

struct ZDStrategy {
  MemoryOneStrategy strategy;
  ZDParams params;
  ZDKind kind;
  // Equalizer: the opponent payoff being fixed. Extortion: the slope s.
  std::optional<double> predicted;
};

// Components within this distance of [0, 1] are snapped onto the interval;
// anything further out is reported as infeasible.
inline constexpr double kFeasibilitySlack = 1e-12;

// Raw components of the donation-game linear strategy, without any
// feasibility check. p3 and p4 include the 1/m factor.
Vec4 LinearStrategyComponents(const ZDParams& params,
                              const DonationParams& donation);

// Enforces alpha s_X + beta s_Y + gamma = 0 against any opponent when played
// with decay params.m. Throws InfeasibleStrategy naming the first component
// outside [0, 1].
ZDStrategy LinearStrategy(const ZDParams& params,
                          const DonationParams& donation);

// Equalizer in donation form: given p1 and p4,
//   p2 = (r p1 - c (1 + p4)) / (r - c)
//   p3 = ((2c - r)(1 - p1) + c p4) / (r - c)
// fixes the opponent's payoff at p4 (r - c) / (2 (1 - p1 + p4)).
// The returned strategy is the undecayed one (valid at m = 1).
ZDStrategy ZDSet(double p1, double p4, const DonationParams& donation);

// Equalizer for arbitrary payoffs: solves p~ = beta S_Y + gamma 1 from rows
// CC and DD, then fills p2 and p3. Fixes the opponent's payoff at
// -gamma / beta.
ZDStrategy SolveEqualizerGeneral(double p1, double p4,
                                 const GamePayoffs& payoffs);

// Extortion through the reference point P = 0 of the donation game:
// p~ = phi (s (S_X - P) - (S_Y - P)), so s_Y - P = s (s_X - P).
ZDStrategy ZDExtortion(double s, double phi, const DonationParams& donation);

// Admissible phi for a given s: (0, 1 / (s (c - r/2) + r/2)].
std::pair<double, double> PhiRange(double s, const DonationParams& donation);

// Admissible extortion factors: [(r - 2c) / r, 1).
std::pair<double, double> SRange(const DonationParams& donation);

}  // namespace zdgame

#endif  // ZDGAME_ZD_STRATEGIES_HPP_
