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

#ifndef ZDGAME_MARKOV_HPP_
#define ZDGAME_MARKOV_HPP_

// Long-run analysis of a memory-one match as a four-state Markov chain.
//
// Two independent routes to the stationary payoffs are provided:
//  * Stationary(): null space of (P^T - I) by SVD, with a rank test.
//  * PressDysonDeterminant(): v.f written as a 4x4 determinant whose second
//    and third columns depend on one player only. A strategy that makes the
//    second column a multiple of f forces v.f = 0 whatever Y plays.

#include <array>

#include "zdgame/game.hpp"

namespace zdgame {

using Mat4 = std::array<Vec4, 4>;

inline constexpr double kStochasticTolerance = 1e-12;
inline constexpr double kRankTolerance = 1e-9;
inline constexpr double kDeterminantFloor = 1e-12;

// Row-stochastic 4x4 matrix over outcome states; rows are the prior state,
// columns the next state, both in X's order CC, CD, DC, DD.
class TransitionMatrix {
 public:
  // Throws DomainError unless entries lie in [0, 1] and every row sums to 1
  // within kStochasticTolerance.
  explicit TransitionMatrix(const Mat4& rows);

  double operator()(int from, int to) const { return rows_[from][to]; }
  const Mat4& rows() const { return rows_; }

 private:
  Mat4 rows_;
};

// Row s is the outer product of (x_s, 1 - x_s) and (y_s, 1 - y_s), where x_s
// and y_s are the players' cooperation probabilities after prior state s.
// Y's own-perspective vector enters as (q1, m q3, q2, m q4).
// Throws DomainError when the roles are not (X, Y) or the m values differ.
TransitionMatrix BuildTransitionMatrix(const DecayedStrategy& px,
                                       const DecayedStrategy& qy);

enum class StationaryMethod { kLinearSolve, kTimeAverage };

struct StationaryResult {
  Vec4 v;
  StationaryMethod method;
  bool unique;
};

// Throws NonUniqueStationary when (P^T - I) has a null space of dimension
// larger than one (second-smallest singular value below kRankTolerance times
// the largest).
StationaryResult Stationary(const TransitionMatrix& matrix);

// Matrix whose determinant is D(p, q, f): column 1 is the joint-cooperation
// column of P minus the CC indicator, column 2 is X's tilted vector
// (p1 - 1, p2 - 1, m p3, m p4), column 3 is Y's tilted vector in X's order
// (q1 - 1, m q3, q2 - 1, m q4), column 4 is f.
Mat4 PressDysonMatrix(const DecayedStrategy& px, const DecayedStrategy& qy,
                      const Vec4& f);

double PressDysonDeterminant(const DecayedStrategy& px,
                             const DecayedStrategy& qy, const Vec4& f);

// Cofactors of the fourth column of P - I, (c14, c24, c34, c44). The
// stationary vector is proportional to them whenever it is unique.
Vec4 StationaryCofactors(const DecayedStrategy& px, const DecayedStrategy& qy);

enum class PayoffMethod { kDeterminant, kLinearSolve, kTimeAverage };

const char* PayoffMethodName(PayoffMethod m);

struct PayoffPair {
  double sx;
  double sy;
  PayoffMethod method;
};

// s_X = D(S_X)/D(1), s_Y = D(S_Y)/D(1). When |D(1)| < kDeterminantFloor the
// linear-solve route is used instead; DegenerateGame is thrown when that is
// not unique either.
PayoffPair ExpectedPayoffs(const DecayedStrategy& px, const DecayedStrategy& qy,
                           const GamePayoffs& payoffs);

// Laplace expansion of a 4x4 determinant.
double Determinant4(const Mat4& a);

}  // namespace zdgame

#endif  // ZDGAME_MARKOV_HPP_
