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

#include "zdgame/markov.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <cstdio>

#include "zdgame/error.hpp"

namespace zdgame {
namespace {

double Det3(double a, double b, double c, double d, double e, double f,
            double g, double h, double i) {
  return a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g);
}

// Determinant of `a` with row `skip_row` and column `skip_col` removed.
double Minor(const Mat4& a, int skip_row, int skip_col) {
  double m[3][3];
  int r = 0;
  for (int i = 0; i < 4; ++i) {
    if (i == skip_row) continue;
    int c = 0;
    for (int j = 0; j < 4; ++j) {
      if (j == skip_col) continue;
      m[r][c++] = a[i][j];
    }
    ++r;
  }
  return Det3(m[0][0], m[0][1], m[0][2], m[1][0], m[1][1], m[1][2], m[2][0],
              m[2][1], m[2][2]);
}

void CheckRoles(const DecayedStrategy& px, const DecayedStrategy& qy) {
  if (px.role != Role::kX || qy.role != Role::kY) {
    throw DomainError("expected an X strategy and a Y strategy");
  }
  if (px.m != qy.m) {
    throw DomainError("both players must use the same decay factor m");
  }
}

double Dot(const Vec4& a, const Vec4& b) {
  return a[0] * b[0] + a[1] * b[1] + a[2] * b[2] + a[3] * b[3];
}

}  // namespace

TransitionMatrix::TransitionMatrix(const Mat4& rows) : rows_(rows) {
  for (int i = 0; i < 4; ++i) {
    double sum = 0.0;
    for (int j = 0; j < 4; ++j) {
      const double e = rows[i][j];
      if (!(e >= 0.0 && e <= 1.0)) {
        throw DomainError("transition entry outside [0,1]");
      }
      sum += e;
    }
    if (std::abs(sum - 1.0) > kStochasticTolerance) {
      char buf[80];
      std::snprintf(buf, sizeof(buf), "transition row %d sums to %.17g", i,
                    sum);
      throw DomainError(buf);
    }
  }
}

TransitionMatrix BuildTransitionMatrix(const DecayedStrategy& px,
                                       const DecayedStrategy& qy) {
  CheckRoles(px, qy);
  const Vec4 x = px.ByXState();
  const Vec4 y = qy.ByXState();
  Mat4 rows{};
  for (int s = 0; s < 4; ++s) {
    rows[s] = {x[s] * y[s], x[s] * (1.0 - y[s]), (1.0 - x[s]) * y[s],
               (1.0 - x[s]) * (1.0 - y[s])};
  }
  return TransitionMatrix(rows);
}

StationaryResult Stationary(const TransitionMatrix& matrix) {
  Eigen::Matrix4d a;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) a(i, j) = matrix(j, i) - (i == j ? 1.0 : 0.0);

  Eigen::JacobiSVD<Eigen::Matrix4d> svd(a, Eigen::ComputeFullV);
  const Eigen::Vector4d sigma = svd.singularValues();
  if (!(sigma(2) > kRankTolerance * sigma(0))) {
    throw NonUniqueStationary(
        "transition matrix has more than one closed class");
  }
  Eigen::Vector4d null = svd.matrixV().col(3);
  null /= null.sum();

  StationaryResult result{{}, StationaryMethod::kLinearSolve, true};
  double total = 0.0;
  for (int i = 0; i < 4; ++i) {
    // Round-off can leave -1e-17 where the true mass is zero.
    result.v[i] = null(i) < 0.0 ? 0.0 : null(i);
    total += result.v[i];
  }
  for (double& vi : result.v) vi /= total;
  return result;
}

Mat4 PressDysonMatrix(const DecayedStrategy& px, const DecayedStrategy& qy,
                      const Vec4& f) {
  CheckRoles(px, qy);
  const Vec4 x = px.ByXState();
  const Vec4 y = qy.ByXState();
  // X cooperated in CC and CD, Y cooperated in CC and DC.
  constexpr Vec4 kXCooperated{1.0, 1.0, 0.0, 0.0};
  constexpr Vec4 kYCooperated{1.0, 0.0, 1.0, 0.0};
  Mat4 a{};
  for (int s = 0; s < 4; ++s) {
    a[s][0] = x[s] * y[s] - (s == 0 ? 1.0 : 0.0);
    a[s][1] = x[s] - kXCooperated[s];
    a[s][2] = y[s] - kYCooperated[s];
    a[s][3] = f[s];
  }
  return a;
}

double PressDysonDeterminant(const DecayedStrategy& px,
                             const DecayedStrategy& qy, const Vec4& f) {
  return Determinant4(PressDysonMatrix(px, qy, f));
}

Vec4 StationaryCofactors(const DecayedStrategy& px, const DecayedStrategy& qy) {
  Mat4 m = BuildTransitionMatrix(px, qy).rows();
  for (int i = 0; i < 4; ++i) m[i][i] -= 1.0;
  Vec4 c{};
  for (int i = 0; i < 4; ++i) {
    const double sign = ((i + 3) % 2 == 0) ? 1.0 : -1.0;
    c[i] = sign * Minor(m, i, 3);
  }
  return c;
}

const char* PayoffMethodName(PayoffMethod m) {
  switch (m) {
    case PayoffMethod::kDeterminant: return "determinant";
    case PayoffMethod::kLinearSolve: return "linear_solve";
    case PayoffMethod::kTimeAverage: return "time_average";
  }
  return "unknown";
}

PayoffPair ExpectedPayoffs(const DecayedStrategy& px, const DecayedStrategy& qy,
                           const GamePayoffs& payoffs) {
  const double norm = PressDysonDeterminant(px, qy, {1.0, 1.0, 1.0, 1.0});
  if (std::abs(norm) >= kDeterminantFloor) {
    return {PressDysonDeterminant(px, qy, payoffs.sx()) / norm,
            PressDysonDeterminant(px, qy, payoffs.sy()) / norm,
            PayoffMethod::kDeterminant};
  }
  try {
    const StationaryResult st = Stationary(BuildTransitionMatrix(px, qy));
    return {Dot(st.v, payoffs.sx()), Dot(st.v, payoffs.sy()),
            PayoffMethod::kLinearSolve};
  } catch (const NonUniqueStationary&) {
    throw DegenerateGame(
        "no unique long-run payoff: the chain has several closed classes");
  }
}

double Determinant4(const Mat4& a) {
  double det = 0.0;
  for (int j = 0; j < 4; ++j) {
    if (a[0][j] == 0.0) continue;
    const double sign = (j % 2 == 0) ? 1.0 : -1.0;
    det += sign * a[0][j] * Minor(a, 0, j);
  }
  return det;
}

}  // namespace zdgame
