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

#include "zdgame/game.hpp"

#include <cmath>
#include <cstdio>

#include "zdgame/error.hpp"

namespace zdgame {

const char* StateName(OutcomeState s) {
  static constexpr const char* kNames[] = {"CC", "CD", "DC", "DD"};
  return kNames[Index(s)];
}

MemoryOneStrategy::MemoryOneStrategy(const Vec4& p) : p_(p) {
  for (int i = 0; i < 4; ++i) {
    if (!std::isfinite(p[i]) || p[i] < 0.0 || p[i] > 1.0) {
      char buf[96];
      std::snprintf(buf, sizeof(buf),
                    "strategy component p%d=%.17g is not a probability", i + 1,
                    p[i]);
      throw DomainError(buf);
    }
  }
}

std::string ToString(const MemoryOneStrategy& s) {
  char buf[128];
  std::snprintf(buf, sizeof(buf), "(%.4f, %.4f, %.4f, %.4f)", s[0], s[1], s[2],
                s[3]);
  return buf;
}

void ValidateDecayFactor(double m) {
  if (!(m > 0.0 && m <= 1.0)) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "m must be in (0,1], got %g", m);
    throw DomainError(buf);
  }
}

Vec4 DecayedStrategy::ByXState() const {
  if (role == Role::kX) return effective;
  return {effective[0], effective[2], effective[1], effective[3]};
}

DecayedStrategy Decay(const MemoryOneStrategy& strategy, double m, Role role) {
  ValidateDecayFactor(m);
  const Vec4& p = strategy.probs();
  // Own states DC and DD are the ones following the owner's own defection.
  return DecayedStrategy{{p[0], p[1], m * p[2], m * p[3]}, m, role};
}

GamePayoffs::GamePayoffs(double reward, double sucker, double temptation,
                         double punishment)
    : sx_{reward, sucker, temptation, punishment},
      sy_{reward, temptation, sucker, punishment},
      pd_valid_(temptation > reward && reward > punishment &&
                punishment > sucker) {}

GamePayoffs MakePayoffs(double R, double S, double T, double P) {
  if (!std::isfinite(R) || !std::isfinite(S) || !std::isfinite(T) ||
      !std::isfinite(P)) {
    throw DomainError("payoffs R, S, T, P must be finite");
  }
  return GamePayoffs(R, S, T, P);
}

void ValidateDonation(const DonationParams& d) {
  if (!(std::isfinite(d.r) && std::isfinite(d.c) && d.c > 0.0 && d.r > d.c)) {
    char buf[96];
    std::snprintf(buf, sizeof(buf),
                  "donation parameters need r > c > 0, got r=%g c=%g", d.r,
                  d.c);
    throw DomainError(buf);
  }
}

GamePayoffs PayoffsFromDonation(const DonationParams& d) {
  ValidateDonation(d);
  return GamePayoffs((d.r - d.c) / 2.0, d.r / 2.0 - d.c, d.r / 2.0, 0.0);
}

GamePayoffs ExperimentPayoffs() { return GamePayoffs(1.5, -1.0, 3.0, 0.0); }

}  // namespace zdgame
