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

#ifndef ZDGAME_GAME_HPP_
#define ZDGAME_GAME_HPP_

// Basic vocabulary of the two-player iterated prisoner's dilemma between an
// honest resource owner X and a possibly dishonest owner Y: actions, joint
// outcomes, memory-one strategies and the stage-game payoffs.

#include <array>
#include <cstdint>
#include <string>

namespace zdgame {

using Vec4 = std::array<double, 4>;

enum class Action : std::uint8_t { kCooperate = 0, kDefect = 1 };

// Joint outcome of one round, always written from X's point of view
// (X's action first). The numeric value is the row/column index used by the
// transition matrix and the component index of every 4-vector.
enum class OutcomeState : std::uint8_t { kCC = 0, kCD = 1, kDC = 2, kDD = 3 };

inline constexpr int kNumStates = 4;

constexpr OutcomeState MakeState(Action x, Action y) {
  return static_cast<OutcomeState>(2 * static_cast<int>(x) +
                                   static_cast<int>(y));
}
constexpr Action XAction(OutcomeState s) {
  return static_cast<Action>(static_cast<int>(s) >> 1);
}
constexpr Action YAction(OutcomeState s) {
  return static_cast<Action>(static_cast<int>(s) & 1);
}
constexpr int Index(OutcomeState s) { return static_cast<int>(s); }

// The same joint outcome as seen by the other player (CD <-> DC).
constexpr OutcomeState SwapPerspective(OutcomeState s) {
  return MakeState(YAction(s), XAction(s));
}

const char* StateName(OutcomeState s);

// Cooperation probabilities conditioned on the previous outcome, indexed
// CC, CD, DC, DD from the owning player's own perspective (own action first).
class MemoryOneStrategy {
 public:
  // Throws DomainError unless every component is finite and in [0, 1].
  explicit MemoryOneStrategy(const Vec4& p);
  MemoryOneStrategy(double p1, double p2, double p3, double p4)
      : MemoryOneStrategy(Vec4{p1, p2, p3, p4}) {}

  double operator[](int i) const { return p_[i]; }
  const Vec4& probs() const { return p_; }

  bool operator==(const MemoryOneStrategy&) const = default;

 private:
  Vec4 p_;
};

std::string ToString(const MemoryOneStrategy& s);

enum class Role { kX, kY };

// A strategy after the betrayal decay m has been applied. `effective` keeps
// the owner's own state order; the factor m multiplies the cooperation
// probability in the two states where the owner defected last round
// (positions 3 and 4 for both players).
struct DecayedStrategy {
  Vec4 effective;
  double m;
  Role role;

  // Cooperation probability of the owner for each prior state in X's state
  // order. For role X this is `effective`; for role Y positions 2 and 3 are
  // exchanged, giving (q1, m q3, q2, m q4).
  Vec4 ByXState() const;
};

// Throws DomainError if m is outside (0, 1].
DecayedStrategy Decay(const MemoryOneStrategy& strategy, double m, Role role);

void ValidateDecayFactor(double m);

// Per-state payoff vectors. sx = (R, S, T, P), sy = (R, T, S, P).
class GamePayoffs {
 public:
  GamePayoffs(double reward, double sucker, double temptation,
              double punishment);

  const Vec4& sx() const { return sx_; }
  const Vec4& sy() const { return sy_; }
  double R() const { return sx_[0]; }
  double S() const { return sx_[1]; }
  double T() const { return sx_[2]; }
  double P() const { return sx_[3]; }
  // True iff T > R > P > S.
  bool pd_valid() const { return pd_valid_; }

  bool operator==(const GamePayoffs&) const = default;

 private:
  Vec4 sx_;
  Vec4 sy_;
  bool pd_valid_;
};

// Throws DomainError on non-finite input; pd_valid is only a flag.
GamePayoffs MakePayoffs(double R, double S, double T, double P);

// Donation-game parameters: benefit r to the partner, cost c to the donor.
struct DonationParams {
  double r = 0.0;
  double c = 0.0;

  bool operator==(const DonationParams&) const = default;
};

void ValidateDonation(const DonationParams& d);

// R = (r - c)/2, S = r/2 - c, T = r/2, P = 0. Throws DomainError unless
// r > c > 0.
GamePayoffs PayoffsFromDonation(const DonationParams& d);

// The payoffs used in the experiments: R = 1.5, S = -1, T = 3, P = 0.
GamePayoffs ExperimentPayoffs();

}  // namespace zdgame

#endif  // ZDGAME_GAME_HPP_
