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

#include "zdgame/arena.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <filesystem>
#include <random>
#include <thread>

#include "zdgame/classic_strategies.hpp"
#include "zdgame/cloud_io.hpp"
#include "zdgame/error.hpp"
#include "zdgame/match.hpp"
#include "zdgame/zd_strategies.hpp"

namespace zdgame {
namespace {

void ValidateSpec(const ExperimentSpec& spec) {
  if (spec.n_opponents == 0) throw DomainError("n_opponents must be >= 1");
  ValidateDecayFactor(spec.m);
  if (spec.mode == CloudMode::kSimulated && spec.rounds == 0) {
    throw DomainError("simulated mode needs rounds >= 1");
  }
}

CloudPoint EvaluateOpponent(const ExperimentSpec& spec,
                            const DecayedStrategy& px, std::uint64_t index) {
  std::mt19937_64 rng(OpponentSeed(spec.master_seed, index));
  const MemoryOneStrategy q = SampleRandomStrategy(rng);
  const DecayedStrategy qy = Decay(q, spec.m, Role::kY);
  const std::uint64_t match_seed = MatchSeed(spec.master_seed, index);

  if (spec.mode == CloudMode::kSimulated) {
    const MatchResult r =
        SimulateMatch(px, qy, spec.payoffs, spec.rounds, match_seed);
    return {r.sx, r.sy, q, false, PayoffMethod::kTimeAverage};
  }
  bool degenerate = false;
  const PayoffPair pair =
      LongRunPayoffs(px, qy, spec.payoffs, match_seed, &degenerate);
  return {pair.sx, pair.sy, q, degenerate, pair.method};
}

double Cross(const Point2& o, const Point2& a, const Point2& b) {
  return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

}  // namespace

std::uint64_t MixBits(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

std::uint64_t OpponentSeed(std::uint64_t master_seed, std::uint64_t index) {
  return MixBits(master_seed + (index + 1) * 0x9E3779B97F4A7C15ULL);
}

std::uint64_t MatchSeed(std::uint64_t master_seed, std::uint64_t index) {
  return MixBits(OpponentSeed(master_seed, index) ^ 0xD1B54A32D192ED03ULL);
}

PayoffCloud RunCloud(const ExperimentSpec& spec) {
  ValidateSpec(spec);
  const DecayedStrategy px = Decay(spec.x_strategy, spec.m, Role::kX);
  const std::uint64_t n = spec.n_opponents;

  PayoffCloud cloud;
  cloud.spec = spec;
  cloud.points.resize(n, CloudPoint{0.0, 0.0, MemoryOneStrategy(0, 0, 0, 0),
                                    false, PayoffMethod::kDeterminant});

  unsigned workers = spec.workers != 0 ? spec.workers
                                       : std::thread::hardware_concurrency();
  workers = static_cast<unsigned>(
      std::clamp<std::uint64_t>(workers == 0 ? 1 : workers, 1, n));

  // Each worker owns a contiguous index range; results land by index.
  std::vector<std::exception_ptr> failures(workers);
  auto run_range = [&](unsigned w) {
    const std::uint64_t begin = n * w / workers;
    const std::uint64_t end = n * (w + 1) / workers;
    try {
      for (std::uint64_t i = begin; i < end; ++i) {
        cloud.points[i] = EvaluateOpponent(spec, px, i);
      }
    } catch (...) {
      failures[w] = std::current_exception();
    }
  };
  if (workers == 1) {
    run_range(0);
  } else {
    std::vector<std::thread> threads;
    threads.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) threads.emplace_back(run_range, w);
    for (std::thread& t : threads) t.join();
  }
  for (const std::exception_ptr& e : failures) {
    if (e) std::rethrow_exception(e);
  }

  try {
    cloud.diagnostics = AnalyzeCloud(std::span<const CloudPoint>(cloud.points));
  } catch (const DegenerateCloud&) {
    // All payoff pairs coincide: no line, empty hull, collinear by convention.
    CloudDiagnostics d;
    d.coincident = true;
    d.dominance_fraction =
        cloud.points[0].sx >= cloud.points[0].sy - kDominanceSlack ? 1.0 : 0.0;
    cloud.diagnostics = d;
  }
  return cloud;
}

std::vector<Point2> ConvexHull(std::vector<Point2> points) {
  std::sort(points.begin(), points.end(), [](const Point2& a, const Point2& b) {
    return a.x < b.x || (a.x == b.x && a.y < b.y);
  });
  points.erase(std::unique(points.begin(), points.end(),
                           [](const Point2& a, const Point2& b) {
                             return a.x == b.x && a.y == b.y;
                           }),
               points.end());
  if (points.size() < 3) return points;

  std::vector<Point2> hull(2 * points.size());
  std::size_t k = 0;
  for (const Point2& p : points) {
    while (k >= 2 && Cross(hull[k - 2], hull[k - 1], p) <= 0.0) --k;
    hull[k++] = p;
  }
  const std::size_t lower = k + 1;
  for (std::size_t i = points.size() - 1; i-- > 0;) {
    while (k >= lower && Cross(hull[k - 2], hull[k - 1], points[i]) <= 0.0) --k;
    hull[k++] = points[i];
  }
  hull.resize(k - 1);
  return hull;
}

double PolygonArea(std::span<const Point2> polygon) {
  if (polygon.size() < 3) return 0.0;
  double twice = 0.0;
  for (std::size_t i = 0; i < polygon.size(); ++i) {
    const Point2& a = polygon[i];
    const Point2& b = polygon[(i + 1) % polygon.size()];
    twice += a.x * b.y - b.x * a.y;
  }
  return std::abs(twice) / 2.0;
}

CloudDiagnostics AnalyzeCloud(std::span<const Point2> points) {
  if (points.empty()) throw DomainError("cannot analyze an empty cloud");
  const Point2 first = points.front();
  const bool coincident =
      std::all_of(points.begin(), points.end(), [&](const Point2& p) {
        return p.x == first.x && p.y == first.y;
      });
  if (coincident) {
    throw DegenerateCloud("all payoff pairs coincide; no line is defined");
  }

  const double n = static_cast<double>(points.size());
  double cx = 0.0, cy = 0.0;
  for (const Point2& p : points) {
    cx += p.x;
    cy += p.y;
  }
  cx /= n;
  cy /= n;
  double sxx = 0.0, syy = 0.0, sxy = 0.0;
  for (const Point2& p : points) {
    const double dx = p.x - cx;
    const double dy = p.y - cy;
    sxx += dx * dx;
    syy += dy * dy;
    sxy += dx * dy;
  }
  // Principal direction of the scatter matrix.
  const double theta = 0.5 * std::atan2(2.0 * sxy, sxx - syy);
  const double ux = std::cos(theta);
  const double uy = std::sin(theta);

  CloudDiagnostics d;
  std::size_t dominated = 0;
  for (const Point2& p : points) {
    const double residual = std::abs(-uy * (p.x - cx) + ux * (p.y - cy));
    d.max_residual = std::max(d.max_residual, residual);
    if (p.x >= p.y - kDominanceSlack) ++dominated;
  }
  d.collinear = d.max_residual < kCollinearTolerance;
  if (std::abs(ux) > 1e-15) {
    const double slope = uy / ux;
    d.line = FittedLine{slope, cy - slope * cx, d.max_residual};
  }
  d.dominance_fraction = static_cast<double>(dominated) / n;
  const std::vector<Point2> hull =
      ConvexHull(std::vector<Point2>(points.begin(), points.end()));
  d.hull_area = PolygonArea(hull);
  return d;
}

CloudDiagnostics AnalyzeCloud(std::span<const CloudPoint> points) {
  std::vector<Point2> xy;
  xy.reserve(points.size());
  for (const CloudPoint& p : points) xy.push_back({p.sx, p.sy});
  return AnalyzeCloud(std::span<const Point2>(xy));
}

std::vector<ExperimentSpec> FigureSpecs(int id, std::uint64_t seed,
                                        const FigureOptions& options) {
  ExperimentSpec base;
  base.n_opponents = options.n_opponents;
  base.workers = options.workers;
  base.master_seed = seed;
  base.mode = CloudMode::kAnalytic;
  base.payoffs = ExperimentPayoffs();

  switch (id) {
    case 2: {
      base.label = "wsls";
      base.x_strategy = Wsls().strategy;
      return {base};
    }
    case 3: {
      ExperimentSpec allc = base;
      allc.label = "allc";
      allc.x_strategy = Allc().strategy;
      ExperimentSpec alld = base;
      alld.label = "alld";
      alld.x_strategy = Alld().strategy;
      return {allc, alld};
    }
    case 4: {
      const ZDStrategy eq = SolveEqualizerGeneral(
          options.equalizer_p1, options.equalizer_p4, base.payoffs);
      base.label = "zd-set";
      base.x_strategy = eq.strategy;
      base.predicted_sy = eq.predicted;
      return {base};
    }
    case 5: {
      const ZDStrategy ext = ZDExtortion(
          options.extortion_s, options.extortion_phi, options.donation);
      base.label = "zd-extortion";
      base.x_strategy = ext.strategy;
      base.payoffs = PayoffsFromDonation(options.donation);
      base.extortion_slope = ext.params.s;
      return {base};
    }
    default:
      throw DomainError("figure id must be one of 2, 3, 4, 5");
  }
}

FigureResult ReproduceFigure(int id, std::uint64_t seed,
                             const std::string& out_dir,
                             const FigureOptions& options) {
  FigureResult result{id, {}, {}};
  for (const ExperimentSpec& spec : FigureSpecs(id, seed, options)) {
    result.clouds.push_back(RunCloud(spec));
  }
  if (out_dir.empty()) return result;

  namespace fs = std::filesystem;
  std::error_code ec;
  fs::create_directories(out_dir, ec);
  if (ec) {
    throw IoError("cannot create output directory " + out_dir + ": " +
                  ec.message());
  }
  const fs::path dir(out_dir);
  static constexpr const char* kColors[] = {"#1f77b4", "#d62728"};
  std::vector<SvgSeries> series;
  for (std::size_t i = 0; i < result.clouds.size(); ++i) {
    const PayoffCloud& cloud = result.clouds[i];
    const std::string name = result.clouds.size() == 1
                                 ? "cloud.csv"
                                 : "cloud_" + cloud.spec.label + ".csv";
    const std::string path = (dir / name).string();
    WriteCloudCsv(cloud, path);
    result.files.push_back(path);
    series.push_back({&cloud, kColors[i % 2]});
  }
  std::string title = "Figure " + std::to_string(id) + ": ";
  for (std::size_t i = 0; i < result.clouds.size(); ++i) {
    title += (i ? ", " : "") + result.clouds[i].spec.label;
  }
  title += " vs random";
  const std::string svg = (dir / "cloud.svg").string();
  WriteCloudSvg(series, title, svg);
  result.files.push_back(svg);
  return result;
}

}  // namespace zdgame
