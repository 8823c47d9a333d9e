/*
 * Copyright 2026 The zdgame Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *      http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/*
 * C interface to libzdgame: memory-one iterated prisoner's dilemma analysis,
 * zero-determinant strategy constructors and payoff-cloud experiments.
 *
 * Conventions:
 *  - Every function returning zdg_status reports failures through it; on
 *    failure zdg_last_error() holds a message for the calling thread and the
 *    output arguments are left untouched.
 *  - 4-vectors are indexed CC, CD, DC, DD from the owner's own perspective
 *    (strategies) or from X's perspective (payoff vectors, stationary
 *    vectors, transition matrices).
 *  - Transition matrices are 16 doubles, row-major, row = prior state.
 *  - Opaque handles are created by the _run and _reproduce calls and released with the
 *    matching _destroy call. Handles are immutable once returned and may be read
 *    from several threads.
 */

#ifndef ZDGAME_ZDGAME_H_
#define ZDGAME_ZDGAME_H_

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(ZDGAME_BUILDING)
#    define ZDG_API __declspec(dllexport)
#  else
#    define ZDG_API __declspec(dllimport)
#  endif
#else
#  define ZDG_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum zdg_status {
  ZDG_OK = 0,
  ZDG_ERR_DOMAIN = 1,
  ZDG_ERR_INFEASIBLE = 2,
  ZDG_ERR_DEGENERATE_EQUALIZER = 3,
  ZDG_ERR_SINGULAR_SYSTEM = 4,
  ZDG_ERR_NON_UNIQUE_STATIONARY = 5,
  ZDG_ERR_DEGENERATE_GAME = 6,
  ZDG_ERR_DEGENERATE_CLOUD = 7,
  ZDG_ERR_IO = 8,
  ZDG_ERR_INVALID_ARGUMENT = 9,
  ZDG_ERR_INTERNAL = 10
} zdg_status;

/* Which constraint an infeasible construction violated. */
typedef enum zdg_constraint {
  ZDG_CONSTRAINT_NONE = 0,
  ZDG_CONSTRAINT_COMPONENT_RANGE = 1,
  ZDG_CONSTRAINT_EXTORTION_FACTOR_RANGE = 2,
  ZDG_CONSTRAINT_PHI_UPPER_BOUND = 3,
  ZDG_CONSTRAINT_PHI_POSITIVE = 4
} zdg_constraint;

typedef enum zdg_role { ZDG_ROLE_X = 0, ZDG_ROLE_Y = 1 } zdg_role;

typedef enum zdg_state {
  ZDG_STATE_CC = 0,
  ZDG_STATE_CD = 1,
  ZDG_STATE_DC = 2,
  ZDG_STATE_DD = 3
} zdg_state;

typedef enum zdg_method {
  ZDG_METHOD_DETERMINANT = 0,
  ZDG_METHOD_LINEAR_SOLVE = 1,
  ZDG_METHOD_TIME_AVERAGE = 2
} zdg_method;

typedef enum zdg_zd_kind {
  ZDG_ZD_LINEAR = 0,
  ZDG_ZD_EQUALIZER = 1,
  ZDG_ZD_EXTORTION = 2
} zdg_zd_kind;

typedef enum zdg_cloud_mode {
  ZDG_MODE_ANALYTIC = 0,
  ZDG_MODE_SIMULATED = 1
} zdg_cloud_mode;

typedef struct zdg_payoffs {
  double sx[4]; /* (R, S, T, P) */
  double sy[4]; /* (R, T, S, P) */
  int pd_valid; /* T > R > P > S */
} zdg_payoffs;

typedef struct zdg_payoff_pair {
  double sx;
  double sy;
  zdg_method method;
  int degenerate; /* 1 when the time-average fallback was used */
} zdg_payoff_pair;

typedef struct zdg_match_result {
  double sx;
  double sy;
  double se_x;
  double se_y;
  uint64_t state_counts[4];
} zdg_match_result;

typedef struct zdg_zd_params {
  double alpha;
  double beta;
  double gamma;
  double phi;
  double s;
  double reference_point;
  double m;
} zdg_zd_params;

typedef struct zdg_zd_strategy {
  double p[4];
  zdg_zd_params params;
  zdg_zd_kind kind;
  int has_predicted;
  double predicted; /* equalizer: opponent payoff; extortion: slope s */
} zdg_zd_strategy;

/* Last error for the calling thread; never NULL. */
ZDG_API const char* zdg_last_error(void);
/* Constraint behind the last ZDG_ERR_INFEASIBLE on this thread. */
ZDG_API zdg_constraint zdg_last_error_constraint(void);
ZDG_API const char* zdg_status_name(zdg_status status);
ZDG_API const char* zdg_version(void);

/* ---- game core ---------------------------------------------------------- */

ZDG_API zdg_status zdg_make_payoffs(double R, double S, double T, double P,
                                    zdg_payoffs* out);
ZDG_API zdg_status zdg_payoffs_from_donation(double r, double c,
                                             zdg_payoffs* out);
/* Own-perspective vector with m applied to positions 3 and 4. */
ZDG_API zdg_status zdg_decay(const double p[4], double m, zdg_role role,
                             double out[4]);
ZDG_API zdg_status zdg_transition_matrix(const double p[4], const double q[4],
                                         double m, double out[16]);
ZDG_API zdg_status zdg_stationary(const double p[4], const double q[4],
                                  double m, double v_out[4]);
ZDG_API zdg_status zdg_press_dyson_d(const double p[4], const double q[4],
                                     double m, const double f[4], double* out);
/* Analytic payoffs; ZDG_ERR_DEGENERATE_GAME when no unique long run exists. */
ZDG_API zdg_status zdg_expected_payoffs(const double p[4], const double q[4],
                                        double m, const zdg_payoffs* payoffs,
                                        zdg_payoff_pair* out);
/* Analytic payoffs with the time-average fallback for degenerate games. */
ZDG_API zdg_status zdg_long_run_payoffs(const double p[4], const double q[4],
                                        double m, const zdg_payoffs* payoffs,
                                        uint64_t seed, zdg_payoff_pair* out);
ZDG_API zdg_status zdg_simulate_match(const double p[4], const double q[4],
                                      double m, const zdg_payoffs* payoffs,
                                      uint64_t rounds, uint64_t seed,
                                      zdg_state initial, uint64_t burn_in,
                                      zdg_match_result* out);

/* ---- strategies --------------------------------------------------------- */

ZDG_API size_t zdg_named_strategy_count(void);
ZDG_API const char* zdg_named_strategy_name(size_t index);
ZDG_API zdg_status zdg_named_strategy(const char* name, double out[4]);

ZDG_API zdg_status zdg_zd_linear(const zdg_zd_params* params, double r,
                                 double c, zdg_zd_strategy* out);
ZDG_API zdg_status zdg_zd_set(double p1, double p4, double r, double c,
                              zdg_zd_strategy* out);
ZDG_API zdg_status zdg_zd_equalizer_general(double p1, double p4,
                                            const zdg_payoffs* payoffs,
                                            zdg_zd_strategy* out);
ZDG_API zdg_status zdg_zd_extortion(double s, double phi, double r, double c,
                                    zdg_zd_strategy* out);
ZDG_API zdg_status zdg_phi_range(double s, double r, double c, double* lo,
                                 double* hi);
ZDG_API zdg_status zdg_s_range(double r, double c, double* lo, double* hi);

/* ---- payoff clouds ------------------------------------------------------ */

typedef struct zdg_cloud zdg_cloud;
typedef struct zdg_figure zdg_figure;

typedef struct zdg_experiment {
  const char* label;       /* may be NULL */
  double x_strategy[4];
  zdg_payoffs payoffs;
  double m;
  uint64_t n_opponents;
  zdg_cloud_mode mode;
  uint64_t rounds;         /* simulated mode only */
  uint64_t master_seed;
  unsigned workers;        /* 0 = hardware concurrency */
} zdg_experiment;

typedef struct zdg_cloud_point {
  double sx;
  double sy;
  double q[4];
  int degenerate;
  zdg_method method;
} zdg_cloud_point;

typedef struct zdg_cloud_diagnostics {
  int collinear;
  int has_line;
  double slope;
  double intercept;
  double max_residual;
  double hull_area;
  double dominance_fraction;
  int coincident;
  int has_predicted_sy;
  double predicted_sy;
  int has_extortion_slope;
  double extortion_slope;
} zdg_cloud_diagnostics;

typedef struct zdg_figure_options {
  uint64_t n_opponents;    /* default 50000 */
  unsigned workers;        /* default 0 */
  double equalizer_p1;     /* default 0.8 */
  double equalizer_p4;     /* default 0.1 */
  double extortion_s;      /* default 0.5 */
  double extortion_phi;    /* default 0.2 */
  double donation_r;       /* default 6 */
  double donation_c;       /* default 4 */
} zdg_figure_options;

ZDG_API void zdg_figure_options_default(zdg_figure_options* out);

ZDG_API zdg_status zdg_cloud_run(const zdg_experiment* spec, zdg_cloud** out);
ZDG_API void zdg_cloud_destroy(zdg_cloud* cloud);
ZDG_API size_t zdg_cloud_size(const zdg_cloud* cloud);
ZDG_API const char* zdg_cloud_label(const zdg_cloud* cloud);
ZDG_API zdg_status zdg_cloud_payoffs(const zdg_cloud* cloud, zdg_payoffs* out);
ZDG_API zdg_status zdg_cloud_point_at(const zdg_cloud* cloud, size_t index,
                                      zdg_cloud_point* out);
ZDG_API zdg_status zdg_cloud_diagnostics_get(const zdg_cloud* cloud,
                                             zdg_cloud_diagnostics* out);
ZDG_API zdg_status zdg_cloud_write_csv(const zdg_cloud* cloud,
                                       const char* path);
ZDG_API zdg_status zdg_cloud_write_svg(const zdg_cloud* cloud,
                                       const char* path, const char* title);

/* Figure presets 2..5. out_dir may be NULL or "" to skip writing files;
 * options may be NULL for the defaults. */
ZDG_API zdg_status zdg_figure_reproduce(int id, uint64_t seed,
                                        const char* out_dir,
                                        const zdg_figure_options* options,
                                        zdg_figure** out);
ZDG_API void zdg_figure_destroy(zdg_figure* figure);
ZDG_API size_t zdg_figure_cloud_count(const zdg_figure* figure);
/* Borrowed pointer, valid until zdg_figure_destroy. */
ZDG_API const zdg_cloud* zdg_figure_cloud(const zdg_figure* figure,
                                          size_t index);
ZDG_API size_t zdg_figure_file_count(const zdg_figure* figure);
ZDG_API const char* zdg_figure_file(const zdg_figure* figure, size_t index);

#ifdef __cplusplus
}
#endif

#endif /* ZDGAME_ZDGAME_H_ */
