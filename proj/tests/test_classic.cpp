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


#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include "doctest.h"
#include "oracles.hpp"
#include "zdgame/classic_strategies.hpp"
#include "zdgame/markov.hpp"
#include "zdgame/match.hpp"

using namespace zdgame;

namespace {

PayoffPair Analytic(const MemoryOneStrategy& p, const MemoryOneStrategy& q) {
  bool degenerate = false;
  return LongRunPayoffs(Decay(p, 1, Role::kX), Decay(q, 1, Role::kY),
                        ExperimentPayoffs(), 1, &degenerate);
}

// Distance from (x, y) to the segment a-b, and the position along it.
std::pair<double, double> SegmentFit(double x, double y, double ax, double ay,
                                     double bx, double by) {
  const double dx = bx - ax, dy = by - ay;
  const double t = ((x - ax) * dx + (y - ay) * dy) / (dx * dx + dy * dy);
  const double px = ax + t * dx, py = ay + t * dy;
  return {std::hypot(x - px, y - py), t};
}

}  // namespace

TEST_CASE("registry") {
  CHECK(Wsls().strategy == MemoryOneStrategy(1, 0, 0, 1));
  CHECK(Allc().strategy == MemoryOneStrategy(1, 1, 1, 1));
  CHECK(Alld().strategy == MemoryOneStrategy(0, 0, 0, 0));
  CHECK(Tft().strategy == MemoryOneStrategy(1, 0, 1, 0));
  CHECK_FALSE(Tft().used_in_experiments);
  CHECK(Wsls().used_in_experiments);
  CHECK(StrategyRegistry().size() == 4);
  REQUIRE(FindStrategy("alld").has_value());
  CHECK(FindStrategy("alld")->strategy == Alld().strategy);
  CHECK_FALSE(FindStrategy("grim").has_value());
}

TEST_CASE("WSLS traces") {
  const MemoryOneStrategy w = Wsls().strategy;
  PayoffPair r = Analytic(w, Allc().strategy);
  CHECK(r.sx == doctest::Approx(1.5));
  CHECK(r.sy == doctest::Approx(1.5));
  r = Analytic(w, Alld().strategy);
  CHECK(r.sx == doctest::Approx(-0.5));
  CHECK(r.sy == doctest::Approx(1.5));

  const MatchResult self =
      SimulateMatch(Decay(w, 1, Role::kX), Decay(w, 1, Role::kY),
                    ExperimentPayoffs(), 5000, 17);
  CHECK(self.state_counts[0] == 5000);
  CHECK(self.sx == 1.5);

  // One step from each state in self-play: win-stay, lose-shift.
  const TransitionMatrix t =
      BuildTransitionMatrix(Decay(w, 1, Role::kX), Decay(w, 1, Role::kY));
  CHECK(t.rows()[0] == Vec4{1, 0, 0, 0});  // CC -> CC
  CHECK(t.rows()[1] == Vec4{0, 0, 0, 1});  // CD: X shifts, Y stays D
  CHECK(t.rows()[2] == Vec4{0, 0, 0, 1});
  CHECK(t.rows()[3] == Vec4{1, 0, 0, 0});  // DD: both shift
}

TEST_CASE("unconditional strategies") {
  PayoffPair r = Analytic(Allc().strategy, Alld().strategy);
  CHECK(r.sx == doctest::Approx(-1));
  CHECK(r.sy == doctest::Approx(3));
  r = Analytic(Alld().strategy, Alld().strategy);
  CHECK(r.sx == doctest::Approx(0));
  CHECK(r.sy == doctest::Approx(0));
}

TEST_CASE("ALLC and ALLD payoffs lie on their segments") {
  std::mt19937_64 rng(4);
  const GamePayoffs g = ExperimentPayoffs();
  for (int k = 0; k < 2000; ++k) {
    const MemoryOneStrategy q(testing::RandomUnit(rng));
    const PayoffPair c = Analytic(Allc().strategy, q);
    auto [dc, tc] = SegmentFit(c.sx, c.sy, g.R(), g.R(), g.S(), g.T());
    CHECK(dc < 1e-9);
    CHECK(tc >= -1e-9);
    CHECK(tc <= 1 + 1e-9);
    const PayoffPair d = Analytic(Alld().strategy, q);
    auto [dd, td] = SegmentFit(d.sx, d.sy, g.T(), g.S(), g.P(), g.P());
    CHECK(dd < 1e-9);
    CHECK(td >= -1e-9);
    CHECK(td <= 1 + 1e-9);
  }
}

TEST_CASE("sampler golden value") {
  std::mt19937_64 rng(42);
  const MemoryOneStrategy s = SampleRandomStrategy(rng);
  std::mt19937_64 again(42);
  CHECK(SampleRandomStrategy(again) == s);
  CHECK(s[0] == doctest::Approx(0.75515553295453897).epsilon(1e-15));
  CHECK(s[1] == doctest::Approx(0.63903139385469743).epsilon(1e-15));
  CHECK(s[2] == doctest::Approx(0.7521452007480266).epsilon(1e-15));
  CHECK(s[3] == doctest::Approx(0.13627268363243705).epsilon(1e-15));
}

TEST_CASE("sampler marginals are uniform") {
  const int n = 100000;
  std::mt19937_64 rng(2718);
  std::vector<double> comp[4];
  for (auto& c : comp) c.reserve(n);
  for (int i = 0; i < n; ++i) {
    const MemoryOneStrategy s = SampleRandomStrategy(rng);
    for (int j = 0; j < 4; ++j) {
      REQUIRE(s[j] >= 0.0);
      REQUIRE(s[j] < 1.0);
      comp[j].push_back(s[j]);
    }
  }
  const double critical = 1.628 / std::sqrt(static_cast<double>(n));
  for (int j = 0; j < 4; ++j) {
    double mean = 0;
    for (double x : comp[j]) mean += x;
    mean /= n;
    CHECK(std::fabs(mean - 0.5) < 0.005);
    std::sort(comp[j].begin(), comp[j].end());
    double ks = 0;
    for (int i = 0; i < n; ++i) {
      const double x = comp[j][i];
      ks = std::max({ks, (i + 1.0) / n - x, x - static_cast<double>(i) / n});
    }
    CAPTURE(j);
    CHECK(ks < critical);
  }
}
