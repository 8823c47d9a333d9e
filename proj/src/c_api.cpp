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

#include "zdgame/zdgame.h"

#include <algorithm>
#include <memory>
#include <new>
#include <string>
#include <vector>

#include "zdgame/arena.hpp"
#include "zdgame/classic_strategies.hpp"
#include "zdgame/cloud_io.hpp"
#include "zdgame/error.hpp"
#include "zdgame/game.hpp"
#include "zdgame/markov.hpp"
#include "zdgame/match.hpp"
#include "zdgame/zd_strategies.hpp"

struct zdg_cloud {
  zdgame::PayoffCloud cloud;
};

struct zdg_figure {
  int id;
  std::vector<zdg_cloud> clouds;
  std::vector<std::string> files;
};

namespace {

using zdgame::Vec4;

thread_local std::string g_last_error;
thread_local zdg_constraint g_last_constraint = ZDG_CONSTRAINT_NONE;

struct InvalidArgument {
  const char* what;
};

zdg_constraint ToC(zdgame::Constraint c) {
  switch (c) {
    case zdgame::Constraint::kComponentRange:
      return ZDG_CONSTRAINT_COMPONENT_RANGE;
    case zdgame::Constraint::kExtortionFactorRange:
      return ZDG_CONSTRAINT_EXTORTION_FACTOR_RANGE;
    case zdgame::Constraint::kPhiUpperBound:
      return ZDG_CONSTRAINT_PHI_UPPER_BOUND;
    case zdgame::Constraint::kPhiPositive:
      return ZDG_CONSTRAINT_PHI_POSITIVE;
  }
  return ZDG_CONSTRAINT_NONE;
}

template <class F>
zdg_status Guard(F&& body) {
  try {
    body();
    return ZDG_OK;
  } catch (const zdgame::InfeasibleStrategy& e) {
    g_last_error = e.what();
    g_last_constraint = ToC(e.constraint());
    return ZDG_ERR_INFEASIBLE;
  } catch (const zdgame::Error& e) {
    g_last_error = e.what();
    g_last_constraint = ZDG_CONSTRAINT_NONE;
    return static_cast<zdg_status>(e.code());
  } catch (const InvalidArgument& e) {
    g_last_error = e.what;
    g_last_constraint = ZDG_CONSTRAINT_NONE;
    return ZDG_ERR_INVALID_ARGUMENT;
  } catch (const std::bad_alloc&) {
    g_last_error = "out of memory";
    return ZDG_ERR_INTERNAL;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return ZDG_ERR_INTERNAL;
  } catch (...) {
    g_last_error = "unknown failure";
    return ZDG_ERR_INTERNAL;
  }
}

void Require(const void* ptr, const char* what) {
  if (ptr == nullptr) throw InvalidArgument{what};
}

Vec4 ToVec(const double* v) { return {v[0], v[1], v[2], v[3]}; }

void FromVec(const Vec4& v, double* out) { std::copy(v.begin(), v.end(), out); }

void FromPayoffs(const zdgame::GamePayoffs& g, zdg_payoffs* out) {
  FromVec(g.sx(), out->sx);
  FromVec(g.sy(), out->sy);
  out->pd_valid = g.pd_valid() ? 1 : 0;
}

zdgame::GamePayoffs ToPayoffs(const zdg_payoffs* p) {
  Require(p, "payoffs must not be NULL");
  // sy is implied by sx.
  return zdgame::MakePayoffs(p->sx[0], p->sx[1], p->sx[2], p->sx[3]);
}

zdg_method ToC(zdgame::PayoffMethod m) {
  switch (m) {
    case zdgame::PayoffMethod::kDeterminant: return ZDG_METHOD_DETERMINANT;
    case zdgame::PayoffMethod::kLinearSolve: return ZDG_METHOD_LINEAR_SOLVE;
    case zdgame::PayoffMethod::kTimeAverage: return ZDG_METHOD_TIME_AVERAGE;
  }
  return ZDG_METHOD_DETERMINANT;
}

zdg_zd_kind ToC(zdgame::ZDKind k) {
  switch (k) {
    case zdgame::ZDKind::kLinearGeneral: return ZDG_ZD_LINEAR;
    case zdgame::ZDKind::kEqualizer: return ZDG_ZD_EQUALIZER;
    case zdgame::ZDKind::kExtortion: return ZDG_ZD_EXTORTION;
  }
  return ZDG_ZD_LINEAR;
}

void FromZD(const zdgame::ZDStrategy& z, zdg_zd_strategy* out) {
  FromVec(z.strategy.probs(), out->p);
  out->params = {z.params.alpha, z.params.beta, z.params.gamma, z.params.phi,
                 z.params.s,     z.params.reference_point,    z.params.m};
  out->kind = ToC(z.kind);
  out->has_predicted = z.predicted.has_value() ? 1 : 0;
  out->predicted = z.predicted.value_or(0.0);
}

struct Players {
  zdgame::DecayedStrategy px;
  zdgame::DecayedStrategy qy;
};

Players MakePlayers(const double* p, const double* q, double m) {
  Require(p, "p must not be NULL");
  Require(q, "q must not be NULL");
  return {zdgame::Decay(zdgame::MemoryOneStrategy(ToVec(p)), m,
                        zdgame::Role::kX),
          zdgame::Decay(zdgame::MemoryOneStrategy(ToVec(q)), m,
                        zdgame::Role::kY)};
}

zdg_payoff_pair ToC(const zdgame::PayoffPair& pair, bool degenerate) {
  return {pair.sx, pair.sy, ToC(pair.method), degenerate ? 1 : 0};
}

}  // namespace

extern "C" {

const char* zdg_last_error(void) { return g_last_error.c_str(); }

zdg_constraint zdg_last_error_constraint(void) { return g_last_constraint; }

const char* zdg_status_name(zdg_status status) {
  if (status == ZDG_OK) return "OK";
  return zdgame::ErrorCodeName(static_cast<zdgame::ErrorCode>(status));
}

const char* zdg_version(void) { return "0.1.0"; }

zdg_status zdg_make_payoffs(double R, double S, double T, double P,
                            zdg_payoffs* out) {
  return Guard([&] {
    Require(out, "out must not be NULL");
    FromPayoffs(zdgame::MakePayoffs(R, S, T, P), out);
  });
}

zdg_status zdg_payoffs_from_donation(double r, double c, zdg_payoffs* out) {
  return Guard([&] {
    Require(out, "out must not be NULL");
    FromPayoffs(zdgame::PayoffsFromDonation({r, c}), out);
  });
}

zdg_status zdg_decay(const double p[4], double m, zdg_role role,
                     double out[4]) {
  return Guard([&] {
    Require(p, "p must not be NULL");
    Require(out, "out must not be NULL");
    const auto d = zdgame::Decay(zdgame::MemoryOneStrategy(ToVec(p)), m,
                                 role == ZDG_ROLE_X ? zdgame::Role::kX
                                                    : zdgame::Role::kY);
    FromVec(d.effective, out);
  });
}

zdg_status zdg_transition_matrix(const double p[4], const double q[4],
                                 double m, double out[16]) {
  return Guard([&] {
    Require(out, "out must not be NULL");
    const Players pl = MakePlayers(p, q, m);
    const auto t = zdgame::BuildTransitionMatrix(pl.px, pl.qy);
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) out[4 * i + j] = t(i, j);
  });
}

zdg_status zdg_stationary(const double p[4], const double q[4], double m,
                          double v_out[4]) {
  return Guard([&] {
    Require(v_out, "v_out must not be NULL");
    const Players pl = MakePlayers(p, q, m);
    FromVec(
        zdgame::Stationary(zdgame::BuildTransitionMatrix(pl.px, pl.qy)).v,
        v_out);
  });
}

zdg_status zdg_press_dyson_d(const double p[4], const double q[4], double m,
                             const double f[4], double* out) {
  return Guard([&] {
    Require(f, "f must not be NULL");
    Require(out, "out must not be NULL");
    const Players pl = MakePlayers(p, q, m);
    *out = zdgame::PressDysonDeterminant(pl.px, pl.qy, ToVec(f));
  });
}

zdg_status zdg_expected_payoffs(const double p[4], const double q[4], double m,
                                const zdg_payoffs* payoffs,
                                zdg_payoff_pair* out) {
  return Guard([&] {
    Require(out, "out must not be NULL");
    const Players pl = MakePlayers(p, q, m);
    *out = ToC(zdgame::ExpectedPayoffs(pl.px, pl.qy, ToPayoffs(payoffs)),
               false);
  });
}

zdg_status zdg_long_run_payoffs(const double p[4], const double q[4], double m,
                                const zdg_payoffs* payoffs, uint64_t seed,
                                zdg_payoff_pair* out) {
  return Guard([&] {
    Require(out, "out must not be NULL");
    const Players pl = MakePlayers(p, q, m);
    bool degenerate = false;
    const auto pair = zdgame::LongRunPayoffs(pl.px, pl.qy, ToPayoffs(payoffs),
                                             seed, &degenerate);
    *out = ToC(pair, degenerate);
  });
}

zdg_status zdg_simulate_match(const double p[4], const double q[4], double m,
                              const zdg_payoffs* payoffs, uint64_t rounds,
                              uint64_t seed, zdg_state initial,
                              uint64_t burn_in, zdg_match_result* out) {
  return Guard([&] {
    Require(out, "out must not be NULL");
    if (initial < ZDG_STATE_CC || initial > ZDG_STATE_DD) {
      throw InvalidArgument{"initial state must be one of CC, CD, DC, DD"};
    }
    const Players pl = MakePlayers(p, q, m);
    zdgame::MatchOptions options;
    options.initial = static_cast<zdgame::OutcomeState>(initial);
    options.burn_in = burn_in;
    const auto r = zdgame::SimulateMatch(pl.px, pl.qy, ToPayoffs(payoffs),
                                         rounds, seed, options);
    out->sx = r.sx;
    out->sy = r.sy;
    out->se_x = r.se_x;
    out->se_y = r.se_y;
    std::copy(r.state_counts.begin(), r.state_counts.end(), out->state_counts);
  });
}

size_t zdg_named_strategy_count(void) {
  return zdgame::StrategyRegistry().size();
}

const char* zdg_named_strategy_name(size_t index) {
  const auto registry = zdgame::StrategyRegistry();
  return index < registry.size() ? registry[index].name.c_str() : nullptr;
}

zdg_status zdg_named_strategy(const char* name, double out[4]) {
  return Guard([&] {
    Require(name, "name must not be NULL");
    Require(out, "out must not be NULL");
    const auto s = zdgame::FindStrategy(name);
    if (!s) {
      throw zdgame::DomainError(std::string("unknown strategy '") + name +
                                "'");
    }
    FromVec(s->strategy.probs(), out);
  });
}

zdg_status zdg_zd_linear(const zdg_zd_params* params, double r, double c,
                         zdg_zd_strategy* out) {
  return Guard([&] {
    Require(params, "params must not be NULL");
    Require(out, "out must not be NULL");
    zdgame::ZDParams zp;
    zp.alpha = params->alpha;
    zp.beta = params->beta;
    zp.gamma = params->gamma;
    zp.phi = params->phi;
    zp.s = params->s;
    zp.reference_point = params->reference_point;
    zp.m = params->m;
    FromZD(zdgame::LinearStrategy(zp, {r, c}), out);
  });
}

zdg_status zdg_zd_set(double p1, double p4, double r, double c,
                      zdg_zd_strategy* out) {
  return Guard([&] {
    Require(out, "out must not be NULL");
    FromZD(zdgame::ZDSet(p1, p4, {r, c}), out);
  });
}

zdg_status zdg_zd_equalizer_general(double p1, double p4,
                                    const zdg_payoffs* payoffs,
                                    zdg_zd_strategy* out) {
  return Guard([&] {
    Require(out, "out must not be NULL");
    FromZD(zdgame::SolveEqualizerGeneral(p1, p4, ToPayoffs(payoffs)), out);
  });
}

zdg_status zdg_zd_extortion(double s, double phi, double r, double c,
                            zdg_zd_strategy* out) {
  return Guard([&] {
    Require(out, "out must not be NULL");
    FromZD(zdgame::ZDExtortion(s, phi, {r, c}), out);
  });
}

zdg_status zdg_phi_range(double s, double r, double c, double* lo,
                         double* hi) {
  return Guard([&] {
    Require(lo, "lo must not be NULL");
    Require(hi, "hi must not be NULL");
    const auto range = zdgame::PhiRange(s, {r, c});
    *lo = range.first;
    *hi = range.second;
  });
}

zdg_status zdg_s_range(double r, double c, double* lo, double* hi) {
  return Guard([&] {
    Require(lo, "lo must not be NULL");
    Require(hi, "hi must not be NULL");
    const auto range = zdgame::SRange({r, c});
    *lo = range.first;
    *hi = range.second;
  });
}

void zdg_figure_options_default(zdg_figure_options* out) {
  if (out == nullptr) return;
  const zdgame::FigureOptions d;
  *out = {d.n_opponents,  d.workers,          d.equalizer_p1,
          d.equalizer_p4, d.extortion_s,      d.extortion_phi,
          d.donation.r,   d.donation.c};
}

zdg_status zdg_cloud_run(const zdg_experiment* spec, zdg_cloud** out) {
  return Guard([&] {
    Require(spec, "spec must not be NULL");
    Require(out, "out must not be NULL");
    zdgame::ExperimentSpec s;
    s.label = spec->label != nullptr ? spec->label : "";
    s.x_strategy = zdgame::MemoryOneStrategy(ToVec(spec->x_strategy));
    s.payoffs = ToPayoffs(&spec->payoffs);
    s.m = spec->m;
    s.n_opponents = spec->n_opponents;
    s.mode = spec->mode == ZDG_MODE_SIMULATED ? zdgame::CloudMode::kSimulated
                                              : zdgame::CloudMode::kAnalytic;
    s.rounds = spec->rounds;
    s.master_seed = spec->master_seed;
    s.workers = spec->workers;
    auto cloud = std::make_unique<zdg_cloud>(zdg_cloud{zdgame::RunCloud(s)});
    *out = cloud.release();
  });
}

void zdg_cloud_destroy(zdg_cloud* cloud) { delete cloud; }

size_t zdg_cloud_size(const zdg_cloud* cloud) {
  return cloud != nullptr ? cloud->cloud.points.size() : 0;
}

const char* zdg_cloud_label(const zdg_cloud* cloud) {
  return cloud != nullptr ? cloud->cloud.spec.label.c_str() : "";
}

zdg_status zdg_cloud_payoffs(const zdg_cloud* cloud, zdg_payoffs* out) {
  return Guard([&] {
    Require(cloud, "cloud must not be NULL");
    Require(out, "out must not be NULL");
    FromPayoffs(cloud->cloud.spec.payoffs, out);
  });
}

zdg_status zdg_cloud_point_at(const zdg_cloud* cloud, size_t index,
                              zdg_cloud_point* out) {
  return Guard([&] {
    Require(cloud, "cloud must not be NULL");
    Require(out, "out must not be NULL");
    if (index >= cloud->cloud.points.size()) {
      throw InvalidArgument{"point index out of range"};
    }
    const zdgame::CloudPoint& p = cloud->cloud.points[index];
    out->sx = p.sx;
    out->sy = p.sy;
    FromVec(p.opponent.probs(), out->q);
    out->degenerate = p.degenerate ? 1 : 0;
    out->method = ToC(p.method);
  });
}

zdg_status zdg_cloud_diagnostics_get(const zdg_cloud* cloud,
                                     zdg_cloud_diagnostics* out) {
  return Guard([&] {
    Require(cloud, "cloud must not be NULL");
    Require(out, "out must not be NULL");
    const zdgame::CloudDiagnostics& d = cloud->cloud.diagnostics;
    const zdgame::ExperimentSpec& s = cloud->cloud.spec;
    *out = {};
    out->collinear = d.collinear ? 1 : 0;
    out->has_line = d.line.has_value() ? 1 : 0;
    if (d.line) {
      out->slope = d.line->slope;
      out->intercept = d.line->intercept;
    }
    out->max_residual = d.max_residual;
    out->hull_area = d.hull_area;
    out->dominance_fraction = d.dominance_fraction;
    out->coincident = d.coincident ? 1 : 0;
    out->has_predicted_sy = s.predicted_sy.has_value() ? 1 : 0;
    out->predicted_sy = s.predicted_sy.value_or(0.0);
    out->has_extortion_slope = s.extortion_slope.has_value() ? 1 : 0;
    out->extortion_slope = s.extortion_slope.value_or(0.0);
  });
}

zdg_status zdg_cloud_write_csv(const zdg_cloud* cloud, const char* path) {
  return Guard([&] {
    Require(cloud, "cloud must not be NULL");
    Require(path, "path must not be NULL");
    zdgame::WriteCloudCsv(cloud->cloud, std::string(path));
  });
}

zdg_status zdg_cloud_write_svg(const zdg_cloud* cloud, const char* path,
                               const char* title) {
  return Guard([&] {
    Require(cloud, "cloud must not be NULL");
    Require(path, "path must not be NULL");
    const zdgame::SvgSeries series[] = {{&cloud->cloud, "#1f77b4"}};
    zdgame::WriteCloudSvg(series, title != nullptr ? title : "",
                          std::string(path));
  });
}

zdg_status zdg_figure_reproduce(int id, uint64_t seed, const char* out_dir,
                                const zdg_figure_options* options,
                                zdg_figure** out) {
  return Guard([&] {
    Require(out, "out must not be NULL");
    zdgame::FigureOptions opts;
    if (options != nullptr) {
      opts.n_opponents = options->n_opponents;
      opts.workers = options->workers;
      opts.equalizer_p1 = options->equalizer_p1;
      opts.equalizer_p4 = options->equalizer_p4;
      opts.extortion_s = options->extortion_s;
      opts.extortion_phi = options->extortion_phi;
      opts.donation = {options->donation_r, options->donation_c};
    }
    zdgame::FigureResult result = zdgame::ReproduceFigure(
        id, seed, out_dir != nullptr ? out_dir : "", opts);
    auto fig = std::make_unique<zdg_figure>();
    fig->id = result.id;
    for (zdgame::PayoffCloud& c : result.clouds) {
      fig->clouds.push_back(zdg_cloud{std::move(c)});
    }
    fig->files = std::move(result.files);
    *out = fig.release();
  });
}

void zdg_figure_destroy(zdg_figure* figure) { delete figure; }

size_t zdg_figure_cloud_count(const zdg_figure* figure) {
  return figure != nullptr ? figure->clouds.size() : 0;
}

const zdg_cloud* zdg_figure_cloud(const zdg_figure* figure, size_t index) {
  if (figure == nullptr || index >= figure->clouds.size()) return nullptr;
  return &figure->clouds[index];
}

size_t zdg_figure_file_count(const zdg_figure* figure) {
  return figure != nullptr ? figure->files.size() : 0;
}

const char* zdg_figure_file(const zdg_figure* figure, size_t index) {
  if (figure == nullptr || index >= figure->files.size()) return nullptr;
  return figure->files[index].c_str();
}

}  // extern "C"
