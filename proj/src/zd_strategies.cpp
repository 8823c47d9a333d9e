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

#include "zdgame/zd_strategies.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "zdgame/error.hpp"

namespace zdgame {
namespace {

constexpr double kDegenerateTolerance = 1e-12;

void CheckProbability(double p, const char* name) {
  if (!(p >= 0.0 && p <= 1.0)) {
    char buf[80];
    std::snprintf(buf, sizeof(buf), "%s=%g must be in [0,1]", name, p);
    throw DomainError(buf);
  }
}

// Snaps rounding-level excursions onto [0, 1]; reports anything larger.
MemoryOneStrategy Feasible(Vec4 p, const char* context) {
  for (int i = 0; i < 4; ++i) {
    double& v = p[i];
    if (!std::isfinite(v) || v < -kFeasibilitySlack ||
        v > 1.0 + kFeasibilitySlack) {
      char buf[160];
      const double excess = v < 0.0 ? -v : v - 1.0;
      std::snprintf(buf, sizeof(buf),
                    "%s: p%d=%.17g outside [0,1] (%s by %.6g)", context, i + 1,
                    v, v < 0.0 ? "below 0" : "above 1", excess);
      throw InfeasibleStrategy(Constraint::kComponentRange, i + 1, v, buf);
    }
    v = std::clamp(v, 0.0, 1.0);
  }
  return MemoryOneStrategy(p);
}

}  // namespace

const char* ZDKindName(ZDKind k) {
  switch (k) {
    case ZDKind::kLinearGeneral: return "linear";
    case ZDKind::kEqualizer: return "equalizer";
    case ZDKind::kExtortion: return "extortion";
  }
  return "unknown";
}

Vec4 LinearStrategyComponents(const ZDParams& params,
                              const DonationParams& donation) {
  ValidateDonation(donation);
  ValidateDecayFactor(params.m);
  const GamePayoffs g = PayoffsFromDonation(donation);
  const double a = params.alpha;
  const double b = params.beta;
  const double k = params.gamma;
  const double phi = params.phi;
  // Tilted components in X's state order; S_Y swaps S and T relative to S_X.
  return {1.0 + phi * (a * g.R() + b * g.R() + k),
          1.0 + phi * (a * g.S() + b * g.T() + k),
          phi * (a * g.T() + b * g.S() + k) / params.m,
          phi * (a * g.P() + b * g.P() + k) / params.m};
}

ZDStrategy LinearStrategy(const ZDParams& params,
                          const DonationParams& donation) {
  if (!std::isfinite(params.phi)) throw DomainError("phi must be finite");
  const Vec4 raw = LinearStrategyComponents(params, donation);
  return ZDStrategy{Feasible(raw, "linear strategy"), params,
                    ZDKind::kLinearGeneral, std::nullopt};
}

ZDStrategy ZDSet(double p1, double p4, const DonationParams& donation) {
  ValidateDonation(donation);
  CheckProbability(p1, "p1");
  CheckProbability(p4, "p4");
  const double r = donation.r;
  const double c = donation.c;
  const double denom = 1.0 - p1 + p4;
  if (denom <= kDegenerateTolerance) {
    throw DegenerateEqualizer(
        "equalizer with 1 - p1 + p4 = 0 cannot fix the opponent's payoff");
  }
  const double p2 = (r * p1 - c * (1.0 + p4)) / (r - c);
  const double p3 = ((2.0 * c - r) * (1.0 - p1) + c * p4) / (r - c);

  ZDParams params;
  params.phi = 1.0;
  params.alpha = 0.0;
  params.beta = 2.0 * (p1 - 1.0 - p4) / (r - c);
  params.gamma = p4;
  const double predicted = p4 * (r - c) / (2.0 * denom);
  return ZDStrategy{Feasible({p1, p2, p3, p4}, "equalizer"), params,
                    ZDKind::kEqualizer, predicted};
}

ZDStrategy SolveEqualizerGeneral(double p1, double p4,
                                 const GamePayoffs& payoffs) {
  CheckProbability(p1, "p1");
  CheckProbability(p4, "p4");
  const double R = payoffs.R();
  const double P = payoffs.P();
  const double scale = std::max({1.0, std::abs(R), std::abs(P)});
  if (std::abs(R - P) <= kDegenerateTolerance * scale) {
    throw SingularSystem("R = P: rows CC and DD do not determine beta, gamma");
  }
  // p1 - 1 = beta R + gamma,  p4 = beta P + gamma.
  const double beta = (p1 - 1.0 - p4) / (R - P);
  const double gamma = p4 - beta * P;
  if (std::abs(beta) <= kDegenerateTolerance) {
    throw DegenerateEqualizer(
        "beta = 0: the strategy exerts no control over the opponent");
  }
  const double p2 = 1.0 + beta * payoffs.T() + gamma;
  const double p3 = beta * payoffs.S() + gamma;

  ZDParams params;
  params.phi = 1.0;
  params.beta = beta;
  params.gamma = gamma;
  return ZDStrategy{Feasible({p1, p2, p3, p4}, "equalizer"), params,
                    ZDKind::kEqualizer, -gamma / beta};
}

std::pair<double, double> SRange(const DonationParams& donation) {
  ValidateDonation(donation);
  return {(donation.r - 2.0 * donation.c) / donation.r, 1.0};
}

std::pair<double, double> PhiRange(double s, const DonationParams& donation) {
  ValidateDonation(donation);
  const double half_r = donation.r / 2.0;
  const double denom = s * (donation.c - half_r) + half_r;
  if (!(denom > 0.0)) {
    char buf[96];
    std::snprintf(buf, sizeof(buf),
                  "phi range empty: s(c-r/2)+r/2 = %g is not positive", denom);
    throw DomainError(buf);
  }
  return {0.0, 1.0 / denom};
}

ZDStrategy ZDExtortion(double s, double phi, const DonationParams& donation) {
  ValidateDonation(donation);
  const auto [s_lo, s_hi] = SRange(donation);
  if (!(s >= s_lo && s < s_hi)) {
    char buf[128];
    std::snprintf(buf, sizeof(buf),
                  "extortion factor range: s=%g outside [(r-2c)/r, 1) = "
                  "[%.4f, 1)",
                  s, s_lo);
    throw InfeasibleStrategy(Constraint::kExtortionFactorRange, 0, s, buf);
  }
  if (!(phi > 0.0)) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "phi=%g must be positive", phi);
    throw InfeasibleStrategy(Constraint::kPhiPositive, 0, phi, buf);
  }
  const double phi_hi = PhiRange(s, donation).second;
  if (phi > phi_hi * (1.0 + kFeasibilitySlack)) {
    char buf[128];
    std::snprintf(buf, sizeof(buf),
                  "phi upper bound 1/(s(c-r/2)+r/2): phi=%g exceeds upper "
                  "bound %.4f",
                  phi, phi_hi);
    throw InfeasibleStrategy(Constraint::kPhiUpperBound, 2, phi, buf);
  }

  const double r = donation.r;
  const double c = donation.c;
  const Vec4 raw{1.0 - phi * (1.0 - s) * (r - c) / 2.0,
                 1.0 - phi * (s * (c - r / 2.0) + r / 2.0),
                 phi * ((c - r / 2.0) + s * r / 2.0), 0.0};

  ZDParams params;
  params.alpha = s;
  params.beta = -1.0;
  params.gamma = 0.0;  // (1 - s) P with P = 0
  params.phi = phi;
  params.s = s;
  params.reference_point = 0.0;
  return ZDStrategy{Feasible(raw, "extortion"), params, ZDKind::kExtortion, s};
}

}  // namespace zdgame
