// Copyright 2026 The lfplay Authors
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
//
// Entropy-regularized two-player zero-sum matrix games: smoothed best
// responses, Fenchel conjugates of the entropic regularizer, saddle value
// and duality gap. All functions here are pure and thread-safe.

#ifndef LFPLAY_GAME_HPP_
#define LFPLAY_GAME_HPP_

#include <cstddef>
#include <vector>

#include "lfplay/simplex.hpp"

namespace lfplay {

// An m x n real payoff matrix, row-major. Row player (y, dimension m)
// receives A[i][j] when she plays i and the column player (x, dimension n)
// plays j.
class PayoffMatrix {
 public:
  PayoffMatrix(std::size_t rows, std::size_t cols, std::vector<double> entries);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  double at(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }
  const std::vector<double>& entries() const { return entries_; }

  // Operator norm from l1 to l_inf; equals the largest absolute entry.
  double max_abs_entry() const;

  // A x (length rows) and A^T y (length cols).
  std::vector<double> Multiply(const std::vector<double>& x) const;
  std::vector<double> MultiplyTransposed(const std::vector<double>& y) const;

  friend bool operator==(const PayoffMatrix&, const PayoffMatrix&) = default;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<double> entries_;
};

// A payoff matrix together with the entropic regularization strength eta > 0.
struct RegularizedGame {
  RegularizedGame(PayoffMatrix payoff_matrix, double regularization);

  PayoffMatrix payoff;
  double eta;

  std::size_t num_x_actions() const { return payoff.cols(); }
  std::size_t num_y_actions() const { return payoff.rows(); }
};

// Iterate pair (x, y) with x of dimension n and y of dimension m.
struct JointState {
  SimplexPoint x;
  SimplexPoint y;

  static JointState Uniform(const RegularizedGame& game);
};

// Condition number ||A||_{1->inf} / eta.
double Kappa(const RegularizedGame& game);

// Smoothed best response of the x player to y:
//   argmin_{x in simplex} <A^T y, x> + eta * sum x ln x  =  softmax(-A^T y / eta).
SimplexPoint LogitResponseX(const RegularizedGame& game, const SimplexPoint& y);

// Smoothed best response of the y player to x:
//   argmax_{y in simplex} <A x, y> - eta * sum y ln y  =  softmax(A x / eta).
SimplexPoint LogitResponseY(const RegularizedGame& game, const SimplexPoint& x);

// Both responses at a joint state, sharing the matrix products.
struct ResponsePair {
  SimplexPoint v;  // LogitResponseX(game, y)
  SimplexPoint s;  // LogitResponseY(game, x)
};
ResponsePair SmoothedResponses(const RegularizedGame& game, const JointState& state);

// Fenchel conjugate of the scaled entropy over the simplex:
//   g(w) = max_{p in simplex} <w, p> - eta * sum p ln p = eta * logsumexp(w / eta).
// ConjugateX takes length-n inputs, ConjugateY length-m inputs.
double ConjugateX(const RegularizedGame& game, const std::vector<double>& w);
double ConjugateY(const RegularizedGame& game, const std::vector<double>& u);

// Gradient of the conjugate; the maximizer softmax(w / eta).
SimplexPoint ConjugateGradX(const RegularizedGame& game, const std::vector<double>& w);
SimplexPoint ConjugateGradY(const RegularizedGame& game, const std::vector<double>& u);

// S(x, y) = eta h(x) + <A x, y> - eta h(y), where h is the negative entropy.
double SaddleValue(const RegularizedGame& game, const SimplexPoint& x,
                   const SimplexPoint& y);

// Duality gap
//   G(x, y) = max_{y'} S(x, y') - min_{x'} S(x', y)
//           = eta h(x) + g_y(A x) + g_x(-A^T y) + eta h(y).
// Evaluated as eta * (KL(x || v) + KL(y || s)) with v, s the smoothed
// responses; this is the same quantity rearranged so that accuracy is
// retained near the saddle point, where the four conjugate/entropy terms
// cancel to below machine precision.
double DualityGap(const RegularizedGame& game, const SimplexPoint& x,
                  const SimplexPoint& y);

// Gap from precomputed responses; avoids recomputing the softmaxes inside
// iteration loops.
double DualityGapFromResponses(const RegularizedGame& game, const JointState& state,
                               const ResponsePair& responses);

// Same value through the other textbook route, S(x, P_y(x)) - S(P_x(y), y).
// Kept as an independent evaluation path for cross-checking.
double DualityGapAlt(const RegularizedGame& game, const SimplexPoint& x,
                     const SimplexPoint& y);

// max over all vertex pairs (e_j, e_i) of the duality gap. The gap is convex
// in x for fixed y and convex in y for fixed x, so the maximum over the
// product of simplices is attained at a vertex pair.
double GapUpperBound(const RegularizedGame& game);

}  // namespace lfplay

#endif  // LFPLAY_GAME_HPP_
