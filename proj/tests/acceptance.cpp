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


// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any
// criterion fails. Runtime targets are part of the pass condition.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>
#include <string>

#include "zdgame/arena.hpp"
#include "zdgame/classic_strategies.hpp"
#include "zdgame/error.hpp"
#include "zdgame/markov.hpp"
#include "zdgame/match.hpp"
#include "zdgame/zd_strategies.hpp"

#ifndef ZDGAME_CLI_PATH
#error "ZDGAME_CLI_PATH must point at the zdgame executable"
#endif

using namespace zdgame;

namespace {

struct Outcome {
  bool pass;
  std::string detail;
};

std::string Fmt(const char* fmt, double a) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), fmt, a);
  return buf;
}

Vec4 RandomInterior(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(0.01, 0.99);
  return {u(rng), u(rng), u(rng), u(rng)};
}

DecayedStrategy X(const Vec4& p, double m = 1) {
  return Decay(MemoryOneStrategy(p), m, Role::kX);
}
DecayedStrategy Y(const Vec4& q, double m = 1) {
  return Decay(MemoryOneStrategy(q), m, Role::kY);
}

// 1. Determinant payoffs vs the linear-solve stationary vector.
Outcome OracleEquivalence() {
  const GamePayoffs g = ExperimentPayoffs();
  std::mt19937_64 rng(20260101);
  double worst = 0;
  int n = 0;
  for (double m : {1.0, 0.7}) {
    for (int k = 0; k < 10000; ++k, ++n) {
      const Vec4 p = RandomInterior(rng), q = RandomInterior(rng);
      const DecayedStrategy dx = X(p, m), dy = Y(q, m);
      const PayoffPair det = ExpectedPayoffs(dx, dy, g);
      if (det.method != PayoffMethod::kDeterminant) {
        return {false, "determinant route not taken for an interior pair"};
      }
      const Vec4 v = Stationary(BuildTransitionMatrix(dx, dy)).v;
      double sx = 0, sy = 0;
      for (int i = 0; i < 4; ++i) {
        sx += v[i] * g.sx()[i];
        sy += v[i] * g.sy()[i];
      }
      worst = std::max({worst, std::fabs(det.sx - sx), std::fabs(det.sy - sy)});
    }
  }
  return {worst < 1e-9, std::to_string(n) + " pairs (m = 1, 0.7), max diff " +
                            Fmt("%.2e", worst) + " < 1e-9"};
}

// 2. Simulation within 3 standard errors of the analytic payoffs.
Outcome SimulationConsistency() {
  const GamePayoffs g = ExperimentPayoffs();
  std::mt19937_64 rng(424242);
  const int pairs = 200;
  int inside = 0;
  for (int k = 0; k < pairs; ++k) {
    const Vec4 p = RandomInterior(rng), q = RandomInterior(rng);
    const PayoffPair a = ExpectedPayoffs(X(p), Y(q), g);
    const MatchResult s = SimulateMatch(X(p), Y(q), g, 1000000, rng());
    if (std::fabs(s.sx - a.sx) <= 3 * s.se_x &&
        std::fabs(s.sy - a.sy) <= 3 * s.se_y) {
      ++inside;
    }
  }
  const double share = static_cast<double>(inside) / pairs;
  return {share >= 0.99, std::to_string(inside) + "/" + std::to_string(pairs) +
                             " pairs within 3 SE at 1e6 rounds (need >= 99%)"};
}

// 3. Equalizer cloud.
Outcome Figure4() {
  const FigureResult f = ReproduceFigure(4, 7, "");
  const PayoffCloud& c = f.clouds.at(0);
  const double predicted = c.spec.predicted_sy.value();
  double worst = 0;
  for (const CloudPoint& p : c.points) {
    if (!p.degenerate) worst = std::max(worst, std::fabs(p.sy - predicted));
  }
  const auto& d = c.diagnostics;
  const double slope = d.line ? std::fabs(d.line->slope) : INFINITY;
  const bool ok = c.points.size() == 50000 && worst < 1e-9 && d.collinear &&
                  slope < 1e-9;
  return {ok, std::to_string(c.points.size()) + " opponents, predicted " +
                  Fmt("%.6f", predicted) + ", max |s_Y - predicted| " +
                  Fmt("%.2e", worst) + ", |slope| " + Fmt("%.2e", slope) +
                  ", collinear " + (d.collinear ? "true" : "false")};
}

// 4. Extortion cloud.
Outcome Figure5() {
  const FigureResult f = ReproduceFigure(5, 7, "");
  const PayoffCloud& c = f.clouds.at(0);
  const double s = c.spec.extortion_slope.value();
  const double P = c.spec.payoffs.P();
  double worst = 0;
  std::size_t violations = 0;
  for (const CloudPoint& p : c.points) {
    worst = std::max(worst, std::fabs(s * (p.sx - P) - (p.sy - P)));
    if (p.sx >= P && p.sy > p.sx + kDominanceSlack) ++violations;
  }
  const bool ok = c.points.size() == 50000 && worst < 1e-9 && violations == 0;
  return {ok, std::to_string(c.points.size()) + " opponents, slope " +
                  Fmt("%.2f", s) + ", max residual " + Fmt("%.2e", worst) +
                  ", dominance violations " + std::to_string(violations)};
}

double SegmentDistance(double x, double y, double ax, double ay, double bx,
                       double by) {
  const double dx = bx - ax, dy = by - ay;
  double t = ((x - ax) * dx + (y - ay) * dy) / (dx * dx + dy * dy);
  t = std::clamp(t, 0.0, 1.0);
  return std::hypot(x - (ax + t * dx), y - (ay + t * dy));
}

// 5. WSLS area, ALLC and ALLD segments.
Outcome Figures2And3() {
  const GamePayoffs g = ExperimentPayoffs();
  const FigureResult f2 = ReproduceFigure(2, 7, "");
  const double area = f2.clouds.at(0).diagnostics.hull_area;
  const FigureResult f3 = ReproduceFigure(3, 7, "");
  const PayoffCloud& allc = f3.clouds.at(0);
  const PayoffCloud& alld = f3.clouds.at(1);
  double dc = 0, dd = 0;
  for (const CloudPoint& p : allc.points) {
    dc = std::max(dc, SegmentDistance(p.sx, p.sy, g.R(), g.R(), g.S(), g.T()));
  }
  for (const CloudPoint& p : alld.points) {
    dd = std::max(dd, SegmentDistance(p.sx, p.sy, g.T(), g.S(), g.P(), g.P()));
  }
  const double rc = allc.diagnostics.max_residual;
  const double rd = alld.diagnostics.max_residual;
  const bool ok = area > 0.1 && allc.diagnostics.collinear &&
                  alld.diagnostics.collinear && rc < 1e-9 && rd < 1e-9 &&
                  dc < 1e-9 && dd < 1e-9;
  return {ok, "WSLS hull area " + Fmt("%.4f", area) +
                  " > 0.1; ALLC fit residual " + Fmt("%.1e", rc) +
                  ", segment distance " + Fmt("%.1e", dc) +
                  "; ALLD fit residual " + Fmt("%.1e", rd) +
                  ", segment distance " + Fmt("%.1e", dd)};
}

// 6. Closed-form equalizer vs the general solver.
Outcome ClosedForm() {
  const DonationParams d{6, 4};
  const ZDStrategy a = ZDSet(0.8, 0.1, d);
  const ZDStrategy b = SolveEqualizerGeneral(0.8, 0.1, PayoffsFromDonation(d));
  const double e2 = std::fabs(a.strategy[1] - 0.2);
  const double e3 = std::fabs(a.strategy[2] - 0.4);
  const double ep = std::fabs(*a.predicted - 1.0 / 3.0);
  double diff = std::fabs(*a.predicted - *b.predicted);
  for (int i = 0; i < 4; ++i) {
    diff = std::max(diff, std::fabs(a.strategy[i] - b.strategy[i]));
  }
  const bool ok = e2 <= 1e-12 && e3 <= 1e-12 && ep <= 1e-12 && diff <= 1e-12;
  return {ok, "p = " + ToString(a.strategy) + ", predicted " +
                  Fmt("%.12f", *a.predicted) + "; general solver diff " +
                  Fmt("%.1e", diff) + " <= 1e-12"};
}

// 7. Extortion feasibility boundaries.
Outcome Boundaries() {
  const DonationParams d{6, 4};
  const double s = 0.5;
  const double hi = PhiRange(s, d).second;
  const ZDStrategy at = ZDExtortion(s, hi, d);
  double closest = 1;
  for (int i = 0; i < 4; ++i) {
    closest = std::min({closest, std::fabs(at.strategy[i]),
                        std::fabs(1 - at.strategy[i])});
  }
  // A component other than the always-zero p4 must bind.
  double binding = 1;
  for (int i = 0; i < 3; ++i) {
    binding = std::min({binding, std::fabs(at.strategy[i]),
                        std::fabs(1 - at.strategy[i])});
  }
  bool phi_named = false, s_named = false;
  std::string phi_msg, s_msg;
  try {
    ZDExtortion(s, hi * 1.01, d);
  } catch (const InfeasibleStrategy& e) {
    phi_named = e.constraint() == Constraint::kPhiUpperBound &&
                std::string(e.what()).find("phi upper bound") != std::string::npos;
    phi_msg = e.what();
  }
  try {
    ZDExtortion(1.0, 0.1, d);
  } catch (const InfeasibleStrategy& e) {
    s_named = e.constraint() == Constraint::kExtortionFactorRange &&
              std::string(e.what()).find("extortion factor range") !=
                  std::string::npos;
    s_msg = e.what();
  }
  bool low_named = false;
  try {
    ZDExtortion(SRange(d).first - 1e-6, 0.1, d);
  } catch (const InfeasibleStrategy& e) {
    low_named = e.constraint() == Constraint::kExtortionFactorRange;
  }
  const bool ok = binding <= 1e-12 && phi_named && s_named && low_named;
  return {ok, "at phi = " + Fmt("%.6f", hi) + " nearest bound " +
                  Fmt("%.1e", binding) + "; over bound: \"" + phi_msg +
                  "\"; s = 1: \"" + s_msg + "\""};
}

// 8. Hand-computed pairings, analytic and simulated.
Outcome HandComputed() {
  const GamePayoffs g = ExperimentPayoffs();
  struct Case {
    const char* name;
    MemoryOneStrategy x, y;
    double sx, sy;
  };
  const Case cases[] = {
      {"WSLS-ALLD", Wsls().strategy, Alld().strategy, -0.5, 1.5},
      {"ALLC-ALLD", Allc().strategy, Alld().strategy, -1.0, 3.0},
      {"ALLC-ALLC", Allc().strategy, Allc().strategy, 1.5, 1.5},
  };
  bool ok = true;
  std::string detail;
  for (const Case& c : cases) {
    bool degenerate = false;
    const DecayedStrategy dx = Decay(c.x, 1, Role::kX);
    const DecayedStrategy dy = Decay(c.y, 1, Role::kY);
    const PayoffPair a = LongRunPayoffs(dx, dy, g, 1, &degenerate);
    const MatchResult s = SimulateMatch(dx, dy, g, 100000, 1);
    const double ea = std::max(std::fabs(a.sx - c.sx), std::fabs(a.sy - c.sy));
    const double es = std::max(std::fabs(s.sx - c.sx), std::fabs(s.sy - c.sy));
    const bool here = ea < 1e-12 && es < 1e-3;
    ok = ok && here;
    detail += std::string(c.name) + " analytic err " + Fmt("%.0e", ea) +
              " sim err " + Fmt("%.0e", es) + "; ";
  }
  return {ok, detail};
}

std::string Slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

// 9. Byte-identical CSV across runs and worker counts.
Outcome Determinism() {
  namespace fs = std::filesystem;
  const fs::path root = fs::temp_directory_path() / "zdgame_acceptance_c9";
  fs::remove_all(root);
  const char* runs[][2] = {{"a", "1"}, {"b", "1"}, {"c", "4"}, {"d", "0"}};
  for (const auto& r : runs) {
    const std::string cmd = std::string("\"") + ZDGAME_CLI_PATH +
                            "\" figure --id 4 --seed 7 --workers " + r[1] +
                            " --out \"" + (root / r[0]).string() +
                            "\" > /dev/null";
    if (std::system(cmd.c_str()) != 0) {
      return {false, "command failed: " + cmd};
    }
  }
  const std::string ref = Slurp(root / "a" / "cloud.csv");
  bool same = !ref.empty();
  for (const char* dir : {"b", "c", "d"}) {
    same = same && Slurp(root / dir / "cloud.csv") == ref;
  }
  return {same, "figure 4, seed 7: 4 runs (workers 1, 1, 4, auto), " +
                    std::to_string(ref.size()) + " bytes each, " +
                    (same ? "identical" : "DIFFERENT")};
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* title;
    double budget_s;  // runtime target, 0 = none
    std::function<Outcome()> run;
  };
  const Criterion criteria[] = {
      {1, "oracle equivalence", 10, OracleEquivalence},
      {2, "simulation consistency", 60, SimulationConsistency},
      {3, "equalizer cloud (figure 4)", 30, Figure4},
      {4, "extortion cloud (figure 5)", 0, Figure5},
      {5, "WSLS area, ALLC/ALLD lines (figures 2, 3)", 0, Figures2And3},
      {6, "closed-form equalizer cross-check", 0, ClosedForm},
      {7, "extortion feasibility boundaries", 0, Boundaries},
      {8, "hand-computed pairings", 0, HandComputed},
      {9, "determinism", 0, Determinism},
  };
  int failed = 0;
  for (const Criterion& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
            .count();
    bool pass = o.pass;
    std::string timing = Fmt("%.2f s", secs);
    if (c.budget_s > 0) {
      timing += Fmt(" (target < %.0f s)", c.budget_s);
      if (secs >= c.budget_s) pass = false;
    }
    if (!pass) ++failed;
    std::printf("[%s] criterion %d: %s: %s [%s]\n", pass ? "PASS" : "FAIL",
                c.id, c.title, o.detail.c_str(), timing.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of 9 criteria passed\n", 9 - failed);
  return failed == 0 ? 0 : 1;
}
