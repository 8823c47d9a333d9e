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

#include "zdgame/match.hpp"

#include <cmath>
#include <random>
#include <vector>

#include "zdgame/classic_strategies.hpp"
#include "zdgame/error.hpp"

namespace zdgame {
namespace {

constexpr std::uint64_t kBatches = 100;
constexpr std::uint64_t kMinRoundsForBatches = 1000;

double CountsDot(const std::array<std::uint64_t, 4>& counts, const Vec4& f) {
  double total = 0.0;
  for (int i = 0; i < 4; ++i) total += static_cast<double>(counts[i]) * f[i];
  return total;
}

double IidStandardError(const std::array<std::uint64_t, 4>& counts,
                        const Vec4& f, double mean, double n) {
  double var = 0.0;
  for (int i = 0; i < 4; ++i) {
    const double d = f[i] - mean;
    var += static_cast<double>(counts[i]) / n * d * d;
  }
  return std::sqrt(var / n);
}

double BatchStandardError(const std::vector<double>& means) {
  const double b = static_cast<double>(means.size());
  double mu = 0.0;
  for (double m : means) mu += m;
  mu /= b;
  double ss = 0.0;
  for (double m : means) ss += (m - mu) * (m - mu);
  return std::sqrt(ss / (b - 1.0) / b);
}

}  // namespace

MatchResult SimulateMatch(const DecayedStrategy& px, const DecayedStrategy& qy,
                          const GamePayoffs& payoffs, std::uint64_t rounds,
                          std::uint64_t seed, const MatchOptions& options) {
  if (rounds == 0) throw DomainError("rounds must be at least 1");
  if (px.role != Role::kX || qy.role != Role::kY || px.m != qy.m) {
    throw DomainError("expected an X and a Y strategy with the same m");
  }
  const Vec4 x = px.ByXState();
  const Vec4 y = qy.ByXState();
  std::mt19937_64 rng(seed);

  int state = Index(options.initial);
  auto step = [&]() {
    const bool x_coop = UniformUnit(rng) < x[state];
    const bool y_coop = UniformUnit(rng) < y[state];
    state = (x_coop ? 0 : 2) + (y_coop ? 0 : 1);
  };
  for (std::uint64_t i = 0; i < options.burn_in; ++i) step();

  MatchResult result;
  const bool batched = rounds >= kMinRoundsForBatches;
  std::vector<double> batch_x, batch_y;
  std::uint64_t done = 0;
  for (std::uint64_t b = 0; b < (batched ? kBatches : 1); ++b) {
    const std::uint64_t end = batched ? (b + 1) * rounds / kBatches : rounds;
    std::array<std::uint64_t, 4> counts{};
    for (; done < end; ++done) {
      step();
      ++counts[state];
    }
    std::uint64_t len = 0;
    for (int i = 0; i < 4; ++i) {
      result.state_counts[i] += counts[i];
      len += counts[i];
    }
    if (batched) {
      batch_x.push_back(CountsDot(counts, payoffs.sx()) / len);
      batch_y.push_back(CountsDot(counts, payoffs.sy()) / len);
    }
  }

  const double n = static_cast<double>(rounds);
  result.sx = CountsDot(result.state_counts, payoffs.sx()) / n;
  result.sy = CountsDot(result.state_counts, payoffs.sy()) / n;
  if (batched) {
    result.se_x = BatchStandardError(batch_x);
    result.se_y = BatchStandardError(batch_y);
  } else {
    result.se_x = IidStandardError(result.state_counts, payoffs.sx(),
                                   result.sx, n);
    result.se_y = IidStandardError(result.state_counts, payoffs.sy(),
                                   result.sy, n);
  }
  return result;
}

PayoffPair LongRunPayoffs(const DecayedStrategy& px, const DecayedStrategy& qy,
                          const GamePayoffs& payoffs, std::uint64_t seed,
                          bool* degenerate) {
  try {
    PayoffPair pair = ExpectedPayoffs(px, qy, payoffs);
    if (degenerate != nullptr) *degenerate = false;
    return pair;
  } catch (const DegenerateGame&) {
    MatchOptions options;
    options.burn_in = kFallbackRounds / 10;
    const MatchResult r =
        SimulateMatch(px, qy, payoffs, kFallbackRounds, seed, options);
    if (degenerate != nullptr) *degenerate = true;
    return {r.sx, r.sy, PayoffMethod::kTimeAverage};
  }
}

}  // namespace zdgame
