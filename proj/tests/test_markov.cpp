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


#include <cmath>
#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "zdgame/error.hpp"
#include "zdgame/game.hpp"
#include "zdgame/markov.hpp"

using namespace zdgame;
using zdgame::testing::V4;

namespace {

TransitionMatrix Build(const V4& p, const V4& q, double m) {
  return BuildTransitionMatrix(Decay(MemoryOneStrategy(p), m, Role::kX),
                               Decay(MemoryOneStrategy(q), m, Role::kY));
}

}  // namespace

TEST_CASE("transition matrix entries, one by one") {
  const double p1 = 0.11, p2 = 0.23, p3 = 0.37, p4 = 0.41;
  const double q1 = 0.53, q2 = 0.67, q3 = 0.71, q4 = 0.83;
  const double m = 0.7;
  const TransitionMatrix t = Build({p1, p2, p3, p4}, {q1, q2, q3, q4}, m);
  const double e = 1e-15;
  // prior CC
  CHECK(t(0, 0) == doctest::Approx(p1 * q1).epsilon(e));
  CHECK(t(0, 1) == doctest::Approx(p1 * (1 - q1)).epsilon(e));
  CHECK(t(0, 2) == doctest::Approx((1 - p1) * q1).epsilon(e));
  CHECK(t(0, 3) == doctest::Approx((1 - p1) * (1 - q1)).epsilon(e));
  // prior CD: Y defected, so Y sees DC and uses m q3
  CHECK(t(1, 0) == doctest::Approx(p2 * m * q3).epsilon(e));
  CHECK(t(1, 1) == doctest::Approx(p2 * (1 - m * q3)).epsilon(e));
  CHECK(t(1, 2) == doctest::Approx((1 - p2) * m * q3).epsilon(e));
  CHECK(t(1, 3) == doctest::Approx((1 - p2) * (1 - m * q3)).epsilon(e));
  // prior DC: X defected (m p3), Y sees CD (q2)
  CHECK(t(2, 0) == doctest::Approx(m * p3 * q2).epsilon(e));
  CHECK(t(2, 1) == doctest::Approx(m * p3 * (1 - q2)).epsilon(e));
  CHECK(t(2, 2) == doctest::Approx((1 - m * p3) * q2).epsilon(e));
  CHECK(t(2, 3) == doctest::Approx((1 - m * p3) * (1 - q2)).epsilon(e));
  // prior DD
  CHECK(t(3, 0) == doctest::Approx(m * p4 * m * q4).epsilon(e));
  CHECK(t(3, 1) == doctest::Approx(m * p4 * (1 - m * q4)).epsilon(e));
  CHECK(t(3, 2) == doctest::Approx((1 - m * p4) * m * q4).epsilon(e));
  CHECK(t(3, 3) == doctest::Approx((1 - m * p4) * (1 - m * q4)).epsilon(e));
}

TEST_CASE("transition matrix examples") {
  const TransitionMatrix half = Build({.5, .5, .5, .5}, {.5, .5, .5, .5}, 1);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) CHECK(half(i, j) == 0.25);

  const TransitionMatrix allc = Build({1, 1, 1, 1}, {1, 1, 1, 1}, 1);
  for (int i = 0; i < 4; ++i) CHECK(allc.rows()[i] == Vec4{1, 0, 0, 0});

  const TransitionMatrix wa = Build({1, 0, 0, 1}, {0, 0, 0, 0}, 1);
  CHECK(wa.rows()[1] == Vec4{0, 0, 0, 1});
  CHECK(wa.rows()[3] == Vec4{0, 1, 0, 0});
}

TEST_CASE("rows are stochastic for random inputs") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> um(1e-6, 1.0);
  double worst = 0;
  for (int k = 0; k < 100000; ++k) {
    const double m = (k % 4 == 0) ? 1.0 : um(rng);
    const TransitionMatrix t = Build(testing::RandomUnit(rng),
                                     testing::RandomUnit(rng), m);
    for (int i = 0; i < 4; ++i) {
      double s = 0;
      for (int j = 0; j < 4; ++j) {
        REQUIRE(t(i, j) >= 0.0);
        s += t(i, j);
      }
      worst = std::max(worst, std::fabs(s - 1.0));
    }
  }
  CHECK(worst <= 1e-12);
}

TEST_CASE("matrix construction rejects bad input") {
  Mat4 bad{};
  bad[0] = {0.5, 0.5, 0, 0};
  bad[1] = {0.5, 0.5, 0, 0};
  bad[2] = {0.5, 0.5, 0, 0};
  bad[3] = {0.5, 0.6, 0, 0};
  CHECK_THROWS_AS(TransitionMatrix{bad}, DomainError);
  const MemoryOneStrategy s(1, 1, 1, 1);
  // Roles swapped.
  CHECK_THROWS_AS(
      BuildTransitionMatrix(Decay(s, 1, Role::kY), Decay(s, 1, Role::kX)),
      DomainError);
  // Different m for the two players.
  CHECK_THROWS_AS(
      BuildTransitionMatrix(Decay(s, 1, Role::kX), Decay(s, 0.5, Role::kY)),
      DomainError);
}

TEST_CASE("stationary examples") {
  CHECK(Stationary(Build({1, 1, 1, 1}, {1, 1, 1, 1}, 1)).v == Vec4{1, 0, 0, 0});
  CHECK(Stationary(Build({0, 0, 0, 0}, {0, 0, 0, 0}, 1)).v == Vec4{0, 0, 0, 1});
  const StationaryResult wa = Stationary(Build({1, 0, 0, 1}, {0, 0, 0, 0}, 1));
  CHECK(wa.unique);
  CHECK(wa.v[0] == doctest::Approx(0).epsilon(1e-12));
  CHECK(wa.v[1] == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(wa.v[2] == doctest::Approx(0).epsilon(1e-12));
  CHECK(wa.v[3] == doctest::Approx(0.5).epsilon(1e-12));
  // WSLS vs TFT: CC is absorbing and so is the CD -> DC -> DD -> CD cycle.
  CHECK_THROWS_AS(Stationary(Build({1, 0, 0, 1}, {1, 0, 1, 0}, 1)),
                  NonUniqueStationary);
}

TEST_CASE("stationary agrees with power iteration and elimination") {
  std::mt19937_64 rng(5);
  for (int k = 0; k < 2000; ++k) {
    const V4 p = testing::RandomInterior(rng), q = testing::RandomInterior(rng);
    const double m = k % 2 ? 1.0 : 0.7;
    const Vec4 v = Stationary(Build(p, q, m)).v;
    const auto direct = testing::DirectMatrix(p, q, m);
    const V4 g = testing::GaussStationary(direct);
    const V4 w = testing::PowerStationary(direct);
    for (int i = 0; i < 4; ++i) {
      REQUIRE(std::fabs(v[i] - g[i]) < 1e-12);
      REQUIRE(std::fabs(v[i] - w[i]) < 1e-10);
    }
  }
}

TEST_CASE("determinant payoffs match the linear-solve oracle") {
  const GamePayoffs g = ExperimentPayoffs();
  for (double m : {1.0, 0.7}) {
    std::mt19937_64 rng(m == 1.0 ? 1 : 2);
    double worst = 0;
    for (int k = 0; k < 10000; ++k) {
      const V4 p = testing::RandomInterior(rng), q = testing::RandomInterior(rng);
      const DecayedStrategy dx = Decay(MemoryOneStrategy(p), m, Role::kX);
      const DecayedStrategy dy = Decay(MemoryOneStrategy(q), m, Role::kY);
      const PayoffPair pp = ExpectedPayoffs(dx, dy, g);
      REQUIRE(pp.method == PayoffMethod::kDeterminant);
      const V4 v = testing::GaussStationary(testing::DirectMatrix(p, q, m));
      worst = std::max(worst, std::fabs(pp.sx - testing::Dot(v, g.sx())));
      worst = std::max(worst, std::fabs(pp.sy - testing::Dot(v, g.sy())));
    }
    CAPTURE(m);
    CHECK(worst < 1e-9);
  }
}

TEST_CASE("determinant is linear in f and normalised by D(1)") {
  std::mt19937_64 rng(9);
  std::normal_distribution<double> n01;
  for (int k = 0; k < 500; ++k) {
    const V4 p = testing::RandomInterior(rng), q = testing::RandomInterior(rng);
    const DecayedStrategy dx = Decay(MemoryOneStrategy(p), 0.9, Role::kX);
    const DecayedStrategy dy = Decay(MemoryOneStrategy(q), 0.9, Role::kY);
    const Vec4 f{n01(rng), n01(rng), n01(rng), n01(rng)};
    CHECK(PressDysonDeterminant(dx, dy, {0, 0, 0, 0}) == 0.0);
    const double d1 = PressDysonDeterminant(dx, dy, {1, 1, 1, 1});
    REQUIRE(std::fabs(d1) > 1e-12);
    const V4 v = testing::GaussStationary(testing::DirectMatrix(p, q, 0.9));
    CHECK(PressDysonDeterminant(dx, dy, f) / d1 ==
          doctest::Approx(testing::Dot(v, f)).epsilon(1e-9));
    // Matrix form and determinant helper agree.
    CHECK(Determinant4(PressDysonMatrix(dx, dy, f)) ==
          doctest::Approx(PressDysonDeterminant(dx, dy, f)).epsilon(1e-12));
  }
}

TEST_CASE("stationary vector is proportional to the last-column cofactors") {
  std::mt19937_64 rng(21);
  for (int k = 0; k < 500; ++k) {
    const V4 p = testing::RandomInterior(rng), q = testing::RandomInterior(rng);
    const DecayedStrategy dx = Decay(MemoryOneStrategy(p), 0.8, Role::kX);
    const DecayedStrategy dy = Decay(MemoryOneStrategy(q), 0.8, Role::kY);
    const Vec4 c = StationaryCofactors(dx, dy);
    const double sum = c[0] + c[1] + c[2] + c[3];
    REQUIRE(std::fabs(sum) > 1e-14);
    const V4 v = testing::GaussStationary(testing::DirectMatrix(p, q, 0.8));
    for (int i = 0; i < 4; ++i) {
      CHECK(c[i] / sum == doctest::Approx(v[i]).epsilon(1e-9));
    }
  }
}

TEST_CASE("uniform random play pays 0.875") {
  const DecayedStrategy h =
      Decay(MemoryOneStrategy(.5, .5, .5, .5), 1, Role::kX);
  const DecayedStrategy hy =
      Decay(MemoryOneStrategy(.5, .5, .5, .5), 1, Role::kY);
  const GamePayoffs g = ExperimentPayoffs();
  CHECK(PressDysonDeterminant(h, hy, g.sx()) /
            PressDysonDeterminant(h, hy, {1, 1, 1, 1}) ==
        doctest::Approx(0.875).epsilon(1e-12));
  const PayoffPair pp = ExpectedPayoffs(h, hy, g);
  CHECK(pp.sx == doctest::Approx(0.875).epsilon(1e-12));
  CHECK(pp.sy == doctest::Approx(0.875).epsilon(1e-12));
}

TEST_CASE("expected payoffs for the classic pairings") {
  const GamePayoffs g = ExperimentPayoffs();
  auto pay = [&](const V4& p, const V4& q) {
    return ExpectedPayoffs(Decay(MemoryOneStrategy(p), 1, Role::kX),
                           Decay(MemoryOneStrategy(q), 1, Role::kY), g);
  };
  PayoffPair a = pay({1, 1, 1, 1}, {1, 1, 1, 1});
  CHECK(a.sx == doctest::Approx(1.5));
  CHECK(a.sy == doctest::Approx(1.5));
  a = pay({1, 1, 1, 1}, {0, 0, 0, 0});
  CHECK(a.sx == doctest::Approx(-1));
  CHECK(a.sy == doctest::Approx(3));
  a = pay({1, 0, 0, 1}, {0, 0, 0, 0});
  CHECK(a.sx == doctest::Approx(-0.5));
  CHECK(a.sy == doctest::Approx(1.5));
  CHECK_THROWS_AS(pay({1, 0, 0, 1}, {1, 0, 1, 0}), DegenerateGame);
  CHECK(std::string(PayoffMethodName(PayoffMethod::kTimeAverage)) ==
        "time_average");
}
