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

#include "cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "run_config.hpp"

namespace zdgame::cli {
namespace {

namespace fs = std::filesystem;

// A failed library call, carried to the top level.
struct ApiFailure {
  zdg_status status;
  std::string message;
};

struct UsageError {
  std::string message;
};

void Check(zdg_status status, const std::string& context = "") {
  if (status == ZDG_OK) return;
  std::string msg = zdg_last_error();
  if (!context.empty()) msg = context + ": " + msg;
  throw ApiFailure{status, msg};
}

std::string Fixed(double v, int digits = 4) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*f", digits, v);
  // Avoid "-0.0000".
  if (std::string(buf).find_first_not_of("-0.") == std::string::npos) {
    std::snprintf(buf, sizeof(buf), "%.*f", digits, 0.0);
  }
  return buf;
}

std::string Sci(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.1e", v);
  return buf;
}

std::string Vec(const double* p) {
  return "(" + Fixed(p[0]) + ", " + Fixed(p[1]) + ", " + Fixed(p[2]) + ", " +
         Fixed(p[3]) + ")";
}

const char* MethodName(zdg_method m) {
  switch (m) {
    case ZDG_METHOD_DETERMINANT: return "determinant";
    case ZDG_METHOD_LINEAR_SOLVE: return "linear_solve";
    case ZDG_METHOD_TIME_AVERAGE: return "time_average";
  }
  return "?";
}

const char* KindName(zdg_zd_kind k) {
  switch (k) {
    case ZDG_ZD_LINEAR: return "linear";
    case ZDG_ZD_EQUALIZER: return "equalizer";
    case ZDG_ZD_EXTORTION: return "extortion";
  }
  return "?";
}

// ---- shared flag groups ----------------------------------------------------

struct PayoffFlags {
  std::optional<double> R, S, T, P, r, c;

  void Attach(CLI::App* app) {
    app->add_option("--R", R, "reward payoff");
    app->add_option("--S", S, "sucker payoff");
    app->add_option("--T", T, "temptation payoff");
    app->add_option("--P", P, "punishment payoff");
    app->add_option("--r", r, "donation game benefit");
    app->add_option("--c", c, "donation game cost");
  }

  bool any_rstp() const { return R || S || T || P; }
  bool any_rc() const { return r || c; }

  // Folds the flags into a config; flags win over file values.
  void MergeInto(RunConfig& cfg) const {
    if (any_rstp()) {
      if (!(R && S && T && P)) {
        throw UsageError{"--R, --S, --T and --P must be given together"};
      }
      cfg.rstp = RstpBlock{*R, *S, *T, *P};
      if (!any_rc()) cfg.rc.reset();
    }
    if (any_rc()) {
      if (!(r && c)) throw UsageError{"--r and --c must be given together"};
      cfg.rc = RcBlock{*r, *c};
      if (!any_rstp()) cfg.rstp.reset();
    }
  }
};

struct ZdFlags {
  ZdBlock zd;

  void Attach(CLI::App* app) {
    app->add_option("--p1", zd.p1, "equalizer p1");
    app->add_option("--p4", zd.p4, "equalizer p4");
    app->add_option("--s", zd.s, "extortion slope");
    app->add_option("--phi", zd.phi, "scale factor");
    app->add_option("--alpha", zd.alpha, "linear alpha");
    app->add_option("--beta", zd.beta, "linear beta");
    app->add_option("--gamma", zd.gamma, "linear gamma");
  }

  void MergeInto(ZdBlock& into) const {
    if (zd.p1) into.p1 = zd.p1;
    if (zd.p4) into.p4 = zd.p4;
    if (zd.s) into.s = zd.s;
    if (zd.phi) into.phi = zd.phi;
    if (zd.alpha) into.alpha = zd.alpha;
    if (zd.beta) into.beta = zd.beta;
    if (zd.gamma) into.gamma = zd.gamma;
  }
};

bool IsZdKind(const std::string& name) {
  return name == "zd-set" || name == "zd-extortion" || name == "linear";
}

// Payoffs selected by the rstp / rc blocks. With neither, ZD kinds default to
// the donation game (6, 4) and everything else to the (1.5, -1, 3, 0) game.
struct ResolvedPayoffs {
  zdg_payoffs payoffs{};
  bool donation = false;
  double r = 0, c = 0;
};

ResolvedPayoffs ResolvePayoffs(const std::optional<RstpBlock>& rstp,
                               const std::optional<RcBlock>& rc,
                               bool prefer_donation) {
  if (rstp && rc) {
    throw UsageError{"payoffs conflict: give either R/S/T/P or r/c, not both"};
  }
  ResolvedPayoffs out;
  if (rstp) {
    Check(zdg_make_payoffs(rstp->R, rstp->S, rstp->T, rstp->P, &out.payoffs),
          "payoffs");
    return out;
  }
  if (rc || prefer_donation) {
    out.donation = true;
    out.r = rc ? rc->r : 6.0;
    out.c = rc ? rc->c : 4.0;
    Check(zdg_payoffs_from_donation(out.r, out.c, &out.payoffs), "payoffs");
    return out;
  }
  Check(zdg_make_payoffs(1.5, -1.0, 3.0, 0.0, &out.payoffs), "payoffs");
  return out;
}

void RequireZd(const std::optional<double>& v, const char* flag,
               const std::string& kind) {
  if (!v) throw UsageError{kind + " needs --" + std::string(flag)};
}

// Builds a ZD strategy of the named kind.
zdg_zd_strategy BuildZd(const std::string& kind, const ZdBlock& zd,
                        const ResolvedPayoffs& pay, double m) {
  zdg_zd_strategy out{};
  if (kind == "zd-set") {
    RequireZd(zd.p1, "p1", kind);
    RequireZd(zd.p4, "p4", kind);
    if (pay.donation) {
      Check(zdg_zd_set(*zd.p1, *zd.p4, pay.r, pay.c, &out), "zd-set");
    } else {
      Check(zdg_zd_equalizer_general(*zd.p1, *zd.p4, &pay.payoffs, &out),
            "zd-set");
    }
  } else if (kind == "zd-extortion") {
    RequireZd(zd.s, "s", kind);
    RequireZd(zd.phi, "phi", kind);
    if (!pay.donation) {
      throw UsageError{"zd-extortion is defined for donation payoffs; use --r/--c"};
    }
    Check(zdg_zd_extortion(*zd.s, *zd.phi, pay.r, pay.c, &out), "zd-extortion");
  } else {
    RequireZd(zd.alpha, "alpha", kind);
    RequireZd(zd.beta, "beta", kind);
    RequireZd(zd.gamma, "gamma", kind);
    RequireZd(zd.phi, "phi", kind);
    if (!pay.donation) {
      throw UsageError{"linear is defined for donation payoffs; use --r/--c"};
    }
    zdg_zd_params params{};
    params.alpha = *zd.alpha;
    params.beta = *zd.beta;
    params.gamma = *zd.gamma;
    params.phi = *zd.phi;
    params.m = m;
    Check(zdg_zd_linear(&params, pay.r, pay.c, &out), "linear");
  }
  return out;
}

// A player given by name or explicit vector.
struct PlayerChoice {
  std::optional<std::string> name;
  std::vector<double> p;
};

void ResolvePlayer(const PlayerChoice& choice, const char* who,
                   const ZdBlock& zd, const ResolvedPayoffs& pay, double m,
                   double out[4], std::string* label) {
  if (choice.name && !choice.p.empty()) {
    throw UsageError{std::string("give either --") + who + " or --" + who +
                     "p, not both"};
  }
  if (!choice.p.empty()) {
    if (choice.p.size() != 4) {
      throw UsageError{std::string("--") + who + "p needs 4 probabilities"};
    }
    std::copy(choice.p.begin(), choice.p.end(), out);
    *label = "custom";
    return;
  }
  if (!choice.name) {
    throw UsageError{std::string("missing --") + who + " or --" + who + "p"};
  }
  if (IsZdKind(*choice.name)) {
    const zdg_zd_strategy s = BuildZd(*choice.name, zd, pay, m);
    std::copy(s.p, s.p + 4, out);
  } else {
    Check(zdg_named_strategy(choice.name->c_str(), out),
          std::string("--") + who);
  }
  *label = *choice.name;
}

std::string PayoffText(const zdg_payoffs& p) {
  return "R=" + Fixed(p.sx[0]) + " S=" + Fixed(p.sx[1]) + " T=" +
         Fixed(p.sx[2]) + " P=" + Fixed(p.sx[3]);
}

bool NeedsDonation(const std::optional<std::string>& a,
                   const std::optional<std::string>& b) {
  return (a && IsZdKind(*a)) || (b && IsZdKind(*b));
}

// ---- payoff ----------------------------------------------------------------

struct PayoffCmd {
  PlayerChoice x, y;
  PayoffFlags pay;
  ZdFlags zd;
  double m = 1.0;
  std::uint64_t rounds = 1000000;
  std::uint64_t seed = 0;

  void Attach(CLI::App* app) {
    app->add_option("--x", x.name, "X strategy name");
    app->add_option("--xp", x.p, "X strategy vector p1,p2,p3,p4")
        ->delimiter(',')
        ->expected(4);
    app->add_option("--y", y.name, "Y strategy name");
    app->add_option("--yp", y.p, "Y strategy vector q1,q2,q3,q4")
        ->delimiter(',')
        ->expected(4);
    pay.Attach(app);
    zd.Attach(app);
    app->add_option("--m", m, "decay factor in (0,1]");
    app->add_option("--rounds", rounds, "simulated rounds (0 to skip)");
    app->add_option("--seed", seed, "simulation seed");
  }

  int Run(std::ostream& out) const {
    RunConfig tmp;
    pay.MergeInto(tmp);
    const ResolvedPayoffs rp =
        ResolvePayoffs(tmp.rstp, tmp.rc, NeedsDonation(x.name, y.name));
    double p[4], q[4];
    std::string xl, yl;
    ResolvePlayer(x, "x", zd.zd, rp, m, p, &xl);
    ResolvePlayer(y, "y", zd.zd, rp, m, q, &yl);

    out << "X: " << xl << " " << Vec(p) << "\n";
    out << "Y: " << yl << " " << Vec(q) << "\n";
    out << "payoffs: " << PayoffText(rp.payoffs) << ", m=" << Fixed(m) << "\n";

    zdg_payoff_pair a{};
    Check(zdg_long_run_payoffs(p, q, m, &rp.payoffs, seed, &a), "analytic");
    out << "analytic: (" << Fixed(a.sx) << ", " << Fixed(a.sy)
        << "), method=" << MethodName(a.method)
        << ", degenerate=" << (a.degenerate ? "true" : "false") << "\n";

    if (rounds > 0) {
      zdg_match_result r{};
      Check(zdg_simulate_match(p, q, m, &rp.payoffs, rounds, seed,
                               ZDG_STATE_CC, 0, &r),
            "simulation");
      out << "simulated: (" << Fixed(r.sx) << ", " << Fixed(r.sy)
          << "), se=(" << Sci(r.se_x) << ", " << Sci(r.se_y)
          << "), rounds=" << rounds << ", seed=" << seed << "\n";
    }
    return a.degenerate ? kExitInfeasible : kExitOk;
  }
};

// ---- stationary ------------------------------------------------------------

struct StationaryCmd {
  PlayerChoice x, y;
  PayoffFlags pay;
  ZdFlags zd;
  double m = 1.0;

  void Attach(CLI::App* app) {
    app->add_option("--x", x.name, "X strategy name");
    app->add_option("--xp", x.p, "X strategy vector")->delimiter(',')->expected(4);
    app->add_option("--y", y.name, "Y strategy name");
    app->add_option("--yp", y.p, "Y strategy vector")->delimiter(',')->expected(4);
    pay.Attach(app);
    zd.Attach(app);
    app->add_option("--m", m, "decay factor in (0,1]");
  }

  int Run(std::ostream& out) const {
    RunConfig tmp;
    pay.MergeInto(tmp);
    const ResolvedPayoffs rp =
        ResolvePayoffs(tmp.rstp, tmp.rc, NeedsDonation(x.name, y.name));
    double p[4], q[4];
    std::string xl, yl;
    ResolvePlayer(x, "x", zd.zd, rp, m, p, &xl);
    ResolvePlayer(y, "y", zd.zd, rp, m, q, &yl);

    double mat[16];
    Check(zdg_transition_matrix(p, q, m, mat), "transition matrix");
    static const char* kStates[4] = {"CC", "CD", "DC", "DD"};
    out << "transition matrix (rows: prior state; columns: CC CD DC DD)\n";
    for (int i = 0; i < 4; ++i) {
      out << "  " << kStates[i] << ":";
      for (int j = 0; j < 4; ++j) out << " " << Fixed(mat[4 * i + j]);
      out << "\n";
    }
    const double ones[4] = {1, 1, 1, 1};
    double d1 = 0;
    Check(zdg_press_dyson_d(p, q, m, ones, &d1), "D(1)");
    out << "D(1) = " << Sci(d1) << "\n";
    double v[4];
    Check(zdg_stationary(p, q, m, v), "stationary");
    out << "v = " << Vec(v) << "\n";
    return kExitOk;
  }
};

// ---- zd ----------------------------------------------------------------------

struct ZdCmd {
  ZdFlags zd;
  PayoffFlags pay;
  double m = 1.0;

  void AttachSet(CLI::App* app) {
    app->add_option("--p1", zd.zd.p1, "p1")->required();
    app->add_option("--p4", zd.zd.p4, "p4")->required();
    pay.Attach(app);
  }
  void AttachExtort(CLI::App* app) {
    app->add_option("--s", zd.zd.s, "extortion slope")->required();
    app->add_option("--phi", zd.zd.phi, "scale factor")->required();
    app->add_option("--r", pay.r, "donation benefit");
    app->add_option("--c", pay.c, "donation cost");
  }
  void AttachLinear(CLI::App* app) {
    app->add_option("--alpha", zd.zd.alpha, "alpha")->required();
    app->add_option("--beta", zd.zd.beta, "beta")->required();
    app->add_option("--gamma", zd.zd.gamma, "gamma")->required();
    app->add_option("--phi", zd.zd.phi, "scale factor")->required();
    app->add_option("--m", m, "decay factor in (0,1]");
    app->add_option("--r", pay.r, "donation benefit");
    app->add_option("--c", pay.c, "donation cost");
  }

  int Run(const std::string& kind, std::ostream& out) const {
    RunConfig tmp;
    pay.MergeInto(tmp);
    const ResolvedPayoffs rp = ResolvePayoffs(tmp.rstp, tmp.rc, true);
    const zdg_zd_strategy s = BuildZd(kind, zd.zd, rp, m);

    out << "kind: " << KindName(s.kind) << "\n";
    out << "payoffs: " << PayoffText(rp.payoffs) << "\n";
    out << "p=" << Vec(s.p) << "\n";
    out << "feasible\n";
    if (s.kind == ZDG_ZD_EQUALIZER && s.has_predicted) {
      out << "predicted s_Y = " << Fixed(s.predicted) << "\n";
    } else if (s.kind == ZDG_ZD_EXTORTION) {
      out << "slope " << Fixed(s.params.s) << "\n";
      double lo = 0, hi = 0;
      Check(zdg_phi_range(s.params.s, rp.r, rp.c, &lo, &hi), "phi range");
      out << "phi range (" << Fixed(lo) << ", " << Fixed(hi) << "]\n";
    } else {
      out << "alpha s_X + beta s_Y + gamma = 0 with alpha="
          << Fixed(s.params.alpha) << " beta=" << Fixed(s.params.beta)
          << " gamma=" << Fixed(s.params.gamma) << "\n";
    }
    return kExitOk;
  }
};

// ---- cloud / figure summaries ------------------------------------------------

void SummarizeCloud(const zdg_cloud* cloud, std::ostream& out) {
  zdg_cloud_diagnostics d{};
  Check(zdg_cloud_diagnostics_get(cloud, &d), "diagnostics");
  const std::size_t n = zdg_cloud_size(cloud);
  out << "cloud " << zdg_cloud_label(cloud) << ": " << n << " points\n";
  if (d.coincident) out << "  all points coincide\n";
  if (d.has_line) {
    out << "  line: slope " << Fixed(d.slope) << ", intercept "
        << Fixed(d.intercept) << ", max residual " << Sci(d.max_residual)
        << "\n";
  }
  out << "  hull area " << Fixed(d.hull_area) << ", s_X >= s_Y for "
      << Fixed(100.0 * d.dominance_fraction, 2) << "% of points\n";

  if (d.has_predicted_sy) {
    double dev = 0;
    zdg_cloud_point pt{};
    for (std::size_t i = 0; i < n; ++i) {
      Check(zdg_cloud_point_at(cloud, i, &pt));
      dev = std::max(dev, std::fabs(pt.sy - d.predicted_sy));
    }
    out << "collinear: " << (d.collinear ? "true" : "false") << ", s_Y = "
        << Fixed(d.predicted_sy) << " \xC2\xB1 "
        << (dev < 1e-9 ? std::string("1e-9") : Sci(dev)) << "\n";
    out << "  max |s_Y - predicted| = " << Sci(dev) << "\n";
  } else if (d.has_extortion_slope) {
    zdg_payoffs pay{};
    Check(zdg_cloud_payoffs(cloud, &pay));
    const double P = pay.sx[3];
    const double s = d.extortion_slope;
    double resid = 0;
    bool dominated = true;
    zdg_cloud_point pt{};
    for (std::size_t i = 0; i < n; ++i) {
      Check(zdg_cloud_point_at(cloud, i, &pt));
      resid = std::max(resid, std::fabs(s * (pt.sx - P) - (pt.sy - P)));
      if (pt.sx >= P && pt.sy > pt.sx + 1e-12) dominated = false;
    }
    out << "collinear: " << (d.collinear ? "true" : "false")
        << ", s_Y - P = " << Fixed(s) << " (s_X - P), max residual "
        << Sci(resid) << "\n";
    out << "  s_Y <= s_X wherever s_X >= P: " << (dominated ? "true" : "false")
        << "\n";
  } else {
    out << "collinear: " << (d.collinear ? "true" : "false") << "\n";
  }
}

std::string DefaultOutDir(const std::optional<std::string>& flag,
                          const std::optional<std::string>& config) {
  if (flag) return *flag;
  if (config) return *config;
  if (const char* env = std::getenv("ZDGAME_OUT_DIR"); env && *env) return env;
  return "zdgame_out";
}

// ---- figure ------------------------------------------------------------------

struct FigureCmd {
  int id = 0;
  std::uint64_t seed = 0;
  std::optional<std::string> out_dir;
  std::optional<unsigned> workers;
  std::optional<std::uint64_t> n;
  ZdFlags zd;
  std::optional<double> r, c;

  void Attach(CLI::App* app) {
    app->add_option("--id", id, "figure preset 2..5")
        ->required()
        ->check(CLI::Range(2, 5));
    app->add_option("--seed", seed, "master seed");
    app->add_option("--out", out_dir, "output directory");
    app->add_option("--workers", workers, "worker threads (0 = all cores)");
    app->add_option("--n", n, "number of opponents");
    app->add_option("--p1", zd.zd.p1, "equalizer p1 (figure 4)");
    app->add_option("--p4", zd.zd.p4, "equalizer p4 (figure 4)");
    app->add_option("--s", zd.zd.s, "extortion slope (figure 5)");
    app->add_option("--phi", zd.zd.phi, "extortion phi (figure 5)");
    app->add_option("--r", r, "donation benefit (figure 5)");
    app->add_option("--c", c, "donation cost (figure 5)");
  }
};

int RunFigure(int id, std::uint64_t seed, const std::string& dir,
              const zdg_figure_options& opts, std::ostream& out) {
  zdg_figure* fig = nullptr;
  Check(zdg_figure_reproduce(id, seed, dir.c_str(), &opts, &fig), "figure");
  const std::size_t clouds = zdg_figure_cloud_count(fig);
  out << "figure " << id << ", seed " << seed << "\n";
  try {
    for (std::size_t i = 0; i < clouds; ++i) {
      SummarizeCloud(zdg_figure_cloud(fig, i), out);
    }
  } catch (...) {
    zdg_figure_destroy(fig);
    throw;
  }
  for (std::size_t i = 0; i < zdg_figure_file_count(fig); ++i) {
    out << "wrote " << zdg_figure_file(fig, i) << "\n";
  }
  zdg_figure_destroy(fig);
  return kExitOk;
}

int FigureMain(const FigureCmd& cmd, std::ostream& out) {
  zdg_figure_options opts;
  zdg_figure_options_default(&opts);
  if (cmd.n) opts.n_opponents = *cmd.n;
  if (cmd.workers) opts.workers = *cmd.workers;
  if (cmd.zd.zd.p1) opts.equalizer_p1 = *cmd.zd.zd.p1;
  if (cmd.zd.zd.p4) opts.equalizer_p4 = *cmd.zd.zd.p4;
  if (cmd.zd.zd.s) opts.extortion_s = *cmd.zd.zd.s;
  if (cmd.zd.zd.phi) opts.extortion_phi = *cmd.zd.zd.phi;
  if (cmd.r) opts.donation_r = *cmd.r;
  if (cmd.c) opts.donation_c = *cmd.c;
  if (opts.n_opponents == 0) throw UsageError{"--n must be at least 1"};
  return RunFigure(cmd.id, cmd.seed, DefaultOutDir(cmd.out_dir, std::nullopt),
                   opts, out);
}

// ---- cloud ---------------------------------------------------------------------

struct CloudCmd {
  std::optional<std::string> config;
  std::optional<int> figure;
  std::optional<std::string> strategy;
  std::vector<double> p;
  ZdFlags zd;
  PayoffFlags pay;
  std::optional<double> m;
  std::optional<std::uint64_t> n, rounds, seed;
  std::optional<std::string> mode, out_dir;
  std::optional<unsigned> workers;

  void Attach(CLI::App* app) {
    app->add_option("--config", config, "JSON run configuration");
    app->add_option("--figure", figure, "figure preset 2..5");
    app->add_option("--strategy", strategy,
                    "wsls|allc|alld|tft|zd-set|zd-extortion|linear");
    app->add_option("--p", p, "explicit X strategy p1,p2,p3,p4")
        ->delimiter(',')
        ->expected(4);
    zd.Attach(app);
    pay.Attach(app);
    app->add_option("--m", m, "decay factor in (0,1]");
    app->add_option("--n", n, "number of opponents");
    app->add_option("--mode", mode, "analytic or simulated");
    app->add_option("--rounds", rounds, "rounds per match (simulated mode)");
    app->add_option("--seed", seed, "master seed");
    app->add_option("--workers", workers, "worker threads (0 = all cores)");
    app->add_option("--out", out_dir, "output directory");
  }

  RunConfig Merge() const {
    RunConfig cfg = config ? LoadConfig(*config, false) : RunConfig{};
    // A strategy source on the command line replaces the file's one.
    if (figure || strategy || !p.empty()) {
      cfg.figure.reset();
      cfg.strategy.reset();
      cfg.p.reset();
    }
    if (figure) cfg.figure = figure;
    if (strategy) cfg.strategy = strategy;
    if (!p.empty()) {
      if (p.size() != 4) throw UsageError{"--p needs 4 probabilities"};
      cfg.p = std::array<double, 4>{p[0], p[1], p[2], p[3]};
    }
    zd.MergeInto(cfg.zd);
    pay.MergeInto(cfg);
    if (m) cfg.m = *m;
    if (n) cfg.n_opponents = *n;
    if (mode) cfg.mode = *mode;
    if (rounds) cfg.rounds = *rounds;
    if (seed) cfg.seed = *seed;
    if (workers) cfg.workers = *workers;
    if (out_dir) cfg.out_dir = out_dir;
    ValidateConfig(cfg);
    return cfg;
  }
};

int CloudMain(const CloudCmd& cmd, std::ostream& out) {
  const RunConfig cfg = cmd.Merge();
  const std::string dir = DefaultOutDir(std::nullopt, cfg.out_dir);

  if (cfg.figure) {
    zdg_figure_options opts;
    zdg_figure_options_default(&opts);
    opts.n_opponents = cfg.n_opponents;
    opts.workers = cfg.workers;
    if (cfg.zd.p1) opts.equalizer_p1 = *cfg.zd.p1;
    if (cfg.zd.p4) opts.equalizer_p4 = *cfg.zd.p4;
    if (cfg.zd.s) opts.extortion_s = *cfg.zd.s;
    if (cfg.zd.phi) opts.extortion_phi = *cfg.zd.phi;
    if (cfg.rc) {
      opts.donation_r = cfg.rc->r;
      opts.donation_c = cfg.rc->c;
    }
    return RunFigure(*cfg.figure, cfg.seed, dir, opts, out);
  }

  const bool zd_kind = cfg.strategy && IsZdKind(*cfg.strategy);
  const ResolvedPayoffs rp = ResolvePayoffs(cfg.rstp, cfg.rc, zd_kind);

  zdg_experiment spec{};
  std::string label;
  if (cfg.p) {
    std::copy(cfg.p->begin(), cfg.p->end(), spec.x_strategy);
    label = "custom";
  } else if (zd_kind) {
    const zdg_zd_strategy s = BuildZd(*cfg.strategy, cfg.zd, rp, cfg.m);
    std::copy(s.p, s.p + 4, spec.x_strategy);
    label = *cfg.strategy;
  } else {
    Check(zdg_named_strategy(cfg.strategy->c_str(), spec.x_strategy),
          "strategy");
    label = *cfg.strategy;
  }
  spec.label = label.c_str();
  spec.payoffs = rp.payoffs;
  spec.m = cfg.m;
  spec.n_opponents = cfg.n_opponents;
  spec.mode = cfg.mode == "simulated" ? ZDG_MODE_SIMULATED : ZDG_MODE_ANALYTIC;
  spec.rounds = cfg.rounds;
  spec.master_seed = cfg.seed;
  spec.workers = cfg.workers;

  zdg_cloud* cloud = nullptr;
  Check(zdg_cloud_run(&spec, &cloud), "cloud");
  try {
    out << "X: " << label << " " << Vec(spec.x_strategy) << ", "
        << PayoffText(rp.payoffs) << ", mode " << cfg.mode << "\n";
    SummarizeCloud(cloud, out);
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec) {
      throw ApiFailure{ZDG_ERR_IO,
                       "cannot create directory " + dir + ": " + ec.message()};
    }
    const std::string csv = (fs::path(dir) / "cloud.csv").string();
    const std::string svg = (fs::path(dir) / "cloud.svg").string();
    Check(zdg_cloud_write_csv(cloud, csv.c_str()), "csv");
    Check(zdg_cloud_write_svg(cloud, svg.c_str(), label.c_str()), "svg");
    out << "wrote " << csv << "\nwrote " << svg << "\n";
  } catch (...) {
    zdg_cloud_destroy(cloud);
    throw;
  }
  zdg_cloud_destroy(cloud);
  return kExitOk;
}

}  // namespace

int ExitCodeFor(zdg_status status) {
  switch (status) {
    case ZDG_OK:
      return kExitOk;
    case ZDG_ERR_INFEASIBLE:
    case ZDG_ERR_DEGENERATE_EQUALIZER:
    case ZDG_ERR_SINGULAR_SYSTEM:
    case ZDG_ERR_NON_UNIQUE_STATIONARY:
    case ZDG_ERR_DEGENERATE_GAME:
    case ZDG_ERR_DEGENERATE_CLOUD:
      return kExitInfeasible;
    case ZDG_ERR_DOMAIN:
    case ZDG_ERR_INVALID_ARGUMENT:
      return kExitUsage;
    case ZDG_ERR_IO:
      return kExitIo;
    case ZDG_ERR_INTERNAL:
      return kExitInternal;
  }
  return kExitInternal;
}

int RunCli(int argc, const char* const* argv, std::ostream& out,
           std::ostream& err) {
  CLI::App app{"zdgame: memory-one iterated prisoner's dilemma toolkit"};
  app.name("zdgame");
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(zdg_version()));

  PayoffCmd payoff;
  payoff.Attach(app.add_subcommand("payoff", "analytic and simulated payoffs"));
  StationaryCmd stationary;
  stationary.Attach(
      app.add_subcommand("stationary", "transition matrix and stationary vector"));

  ZdCmd zd_set, zd_extort, zd_linear;
  CLI::App* zd = app.add_subcommand("zd", "zero-determinant constructors");
  zd->require_subcommand(1);
  CLI::App* zd_set_app = zd->add_subcommand("set", "equalizer from p1, p4");
  zd_set.AttachSet(zd_set_app);
  CLI::App* zd_extort_app = zd->add_subcommand("extort", "extortion from s, phi");
  zd_extort.AttachExtort(zd_extort_app);
  CLI::App* zd_linear_app =
      zd->add_subcommand("linear", "strategy from alpha, beta, gamma, phi");
  zd_linear.AttachLinear(zd_linear_app);

  CloudCmd cloud;
  CLI::App* cloud_app = app.add_subcommand("cloud", "payoff cloud experiment");
  cloud.Attach(cloud_app);
  FigureCmd figure;
  CLI::App* figure_app = app.add_subcommand("figure", "figure presets 2..5");
  figure.Attach(figure_app);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (app.got_subcommand("payoff")) return payoff.Run(out);
    if (app.got_subcommand("stationary")) return stationary.Run(out);
    if (zd_set_app->parsed()) return zd_set.Run("zd-set", out);
    if (zd_extort_app->parsed()) return zd_extort.Run("zd-extortion", out);
    if (zd_linear_app->parsed()) return zd_linear.Run("linear", out);
    if (cloud_app->parsed()) return CloudMain(cloud, out);
    if (figure_app->parsed()) return FigureMain(figure, out);
  } catch (const ApiFailure& f) {
    const char* tag = f.status == ZDG_ERR_INFEASIBLE ? "infeasible"
                                                     : zdg_status_name(f.status);
    err << "error (" << tag << "): " << f.message << "\n";
    return ExitCodeFor(f.status);
  } catch (const UsageError& e) {
    err << "error: " << e.message << "\n";
    return kExitUsage;
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
  err << "error: no command\n";
  return kExitUsage;
}

}  // namespace zdgame::cli
