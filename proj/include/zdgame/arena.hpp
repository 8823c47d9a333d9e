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

#ifndef ZDGAME_ARENA_HPP_
#define ZDGAME_ARENA_HPP_

// Payoff clouds: one fixed X strategy against many uniformly random
// opponents, and the geometric diagnostics used to read them.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "zdgame/game.hpp"
#include "zdgame/markov.hpp"

namespace zdgame {

// splitmix64 finalizer.
std::uint64_t MixBits(std::uint64_t z);

// Seed of opponent `index` under `master_seed`:
//   MixBits(master_seed + (index + 1) * 0x9E3779B97F4A7C15)
// Independent of evaluation order.
std::uint64_t OpponentSeed(std::uint64_t master_seed, std::uint64_t index);

// Seed of the match played against opponent `index` (simulated mode and the
// degenerate fallback): MixBits(OpponentSeed(master_seed, index) ^
// 0xD1B54A32D192ED03).
std::uint64_t MatchSeed(std::uint64_t master_seed, std::uint64_t index);

enum class CloudMode { kAnalytic, kSimulated };

struct ExperimentSpec {
  std::string label;
  MemoryOneStrategy x_strategy{1, 1, 1, 1};
  GamePayoffs payoffs = ExperimentPayoffs();
  double m = 1.0;
  std::uint64_t n_opponents = 50000;
  CloudMode mode = CloudMode::kAnalytic;
  std::uint64_t rounds = 0;  // scored rounds per match; simulated mode only
  std::uint64_t master_seed = 0;
  unsigned workers = 0;  // 0 = hardware concurrency
  // Opponent payoff fixed by the X strategy, when it is an equalizer.
  std::optional<double> predicted_sy;
  // Extortion slope, when the X strategy is an extortioner.
  std::optional<double> extortion_slope;
};

struct CloudPoint {
  double sx;
  double sy;
  MemoryOneStrategy opponent;
  bool degenerate;
  PayoffMethod method;
};

struct FittedLine {
  double slope;
  double intercept;
  double max_residual;  // largest orthogonal distance to the line
};

inline constexpr double kCollinearTolerance = 1e-6;
inline constexpr double kDominanceSlack = 1e-12;

struct CloudDiagnostics {
  bool collinear = true;
  // Absent when all points coincide or the fitted line is vertical.
  std::optional<FittedLine> line;
  double max_residual = 0.0;
  double hull_area = 0.0;
  // Share of points with s_X >= s_Y - kDominanceSlack.
  double dominance_fraction = 0.0;
  bool coincident = false;
};

struct PayoffCloud {
  ExperimentSpec spec;
  std::vector<CloudPoint> points;
  CloudDiagnostics diagnostics;
};

struct Point2 {
  double x;
  double y;
};

// Throws DomainError on an invalid spec. Per-point degeneracy is recorded in
// the points, never thrown. The result is the same for any worker count.
PayoffCloud RunCloud(const ExperimentSpec& spec);

// Total-least-squares line, max orthogonal residual, convex hull area and
// dominance fraction. Throws DomainError for an empty input and
// DegenerateCloud when every point coincides.
CloudDiagnostics AnalyzeCloud(std::span<const Point2> points);
CloudDiagnostics AnalyzeCloud(std::span<const CloudPoint> points);

// Counter-clockwise hull (Andrew's monotone chain), collinear points dropped.
std::vector<Point2> ConvexHull(std::vector<Point2> points);
double PolygonArea(std::span<const Point2> polygon);

// Preset parameters for the figure reproductions; every field can be
// overridden.
struct FigureOptions {
  std::uint64_t n_opponents = 50000;
  unsigned workers = 0;
  double equalizer_p1 = 0.8;
  double equalizer_p4 = 0.1;
  double extortion_s = 0.5;
  double extortion_phi = 0.2;
  DonationParams donation{6.0, 4.0};
};

struct FigureResult {
  int id;
  std::vector<PayoffCloud> clouds;
  std::vector<std::string> files;  // written paths, in order
};

// The presets behind each figure:
//   2: WSLS vs random;  3: ALLC and ALLD vs random (two clouds);
//   4: equalizer from SolveEqualizerGeneral on the experiment payoffs;
//   5: extortioner on donation payoffs.
std::vector<ExperimentSpec> FigureSpecs(int id, std::uint64_t seed,
                                        const FigureOptions& options = {});

// Runs FigureSpecs() and, when out_dir is non-empty, writes cloud.csv and
// cloud.svg there (figure 3: cloud_allc.csv, cloud_alld.csv, cloud.svg).
FigureResult ReproduceFigure(int id, std::uint64_t seed,
                             const std::string& out_dir,
                             const FigureOptions& options = {});

}  // namespace zdgame

#endif  // ZDGAME_ARENA_HPP_
