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

#include "lfplay/game.hpp"

#include <cmath>

#include "lfplay/errors.hpp"

namespace lfplay {

namespace {

void CheckFinite(const std::vector<double>& w, const char* what) {
  for (double v : w)
    if (!std::isfinite(v)) throw InvalidInputError(std::string(what) + " has a non-finite entry");
}

}  // namespace

PayoffMatrix::PayoffMatrix(std::size_t rows, std::size_t cols, std::vector<double> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (rows_ == 0 || cols_ == 0) throw InvalidInputError("payoff matrix must be at least 1x1");
  if (entries_.size() != rows_ * cols_)
    throw InvalidInputError("payoff matrix entry count does not match its shape");
  CheckFinite(entries_, "payoff matrix");
}

double PayoffMatrix::max_abs_entry() const {
  double mx = 0.0;
  for (double v : entries_) mx = std::max(mx, std::fabs(v));
  return mx;
}

std::vector<double> PayoffMatrix::Multiply(const std::vector<double>& x) const {
  if (x.size() != cols_) throw InvalidInputError("matrix-vector product: dimension mismatch");
  std::vector<double> out(rows_, 0.0);
  for (std::size_t i = 0; i < rows_; ++i) {
    double acc = 0.0;
    const double* row = entries_.data() + i * cols_;
    for (std::size_t j = 0; j < cols_; ++j) acc += row[j] * x[j];
    out[i] = acc;
  }
  return out;
}

std::vector<double> PayoffMatrix::MultiplyTransposed(const std::vector<double>& y) const {
  if (y.size() != rows_) throw InvalidInputError("transposed product: dimension mismatch");
  std::vector<double> out(cols_, 0.0);
  for (std::size_t i = 0; i < rows_; ++i) {
    const double* row = entries_.data() + i * cols_;
    const double yi = y[i];
    for (std::size_t j = 0; j < cols_; ++j) out[j] += row[j] * yi;
  }
  return out;
}

RegularizedGame::RegularizedGame(PayoffMatrix payoff_matrix, double regularization)
    : payoff(std::move(payoff_matrix)), eta(regularization) {
  if (!(eta > 0.0) || !std::isfinite(eta))
    throw InvalidInputError("regularization strength must be positive and finite");
}

JointState JointState::Uniform(const RegularizedGame& game) {
  return JointState{SimplexPoint::Uniform(game.num_x_actions()),
                    SimplexPoint::Uniform(game.num_y_actions())};
}

double Kappa(const RegularizedGame& game) { return game.payoff.max_abs_entry() / game.eta; }

SimplexPoint LogitResponseX(const RegularizedGame& game, const SimplexPoint& y) {
  if (y.dim() != game.num_y_actions())
    throw InvalidInputError("logit response: y has the wrong dimension");
  std::vector<double> w = game.payoff.MultiplyTransposed(y.probs());
  return UncheckedSimplexPoint(Softmax(Scaled(w, -1.0 / game.eta)));
}

SimplexPoint LogitResponseY(const RegularizedGame& game, const SimplexPoint& x) {
  if (x.dim() != game.num_x_actions())
    throw InvalidInputError("logit response: x has the wrong dimension");
  std::vector<double> u = game.payoff.Multiply(x.probs());
  return UncheckedSimplexPoint(Softmax(Scaled(u, 1.0 / game.eta)));
}

ResponsePair SmoothedResponses(const RegularizedGame& game, const JointState& state) {
  return ResponsePair{LogitResponseX(game, state.y), LogitResponseY(game, state.x)};
}

double ConjugateX(const RegularizedGame& game, const std::vector<double>& w) {
  if (w.size() != game.num_x_actions())
    throw InvalidInputError("conjugate: input has the wrong dimension");
  CheckFinite(w, "conjugate input");
  return game.eta * LogSumExp(Scaled(w, 1.0 / game.eta));
}

double ConjugateY(const RegularizedGame& game, const std::vector<double>& u) {
  if (u.size() != game.num_y_actions())
    throw InvalidInputError("conjugate: input has the wrong dimension");
  CheckFinite(u, "conjugate input");
  return game.eta * LogSumExp(Scaled(u, 1.0 / game.eta));
}

SimplexPoint ConjugateGradX(const RegularizedGame& game, const std::vector<double>& w) {
  if (w.size() != game.num_x_actions())
    throw InvalidInputError("conjugate gradient: input has the wrong dimension");
  CheckFinite(w, "conjugate gradient input");
  return UncheckedSimplexPoint(Softmax(Scaled(w, 1.0 / game.eta)));
}

SimplexPoint ConjugateGradY(const RegularizedGame& game, const std::vector<double>& u) {
  if (u.size() != game.num_y_actions())
    throw InvalidInputError("conjugate gradient: input has the wrong dimension");
  CheckFinite(u, "conjugate gradient input");
  return UncheckedSimplexPoint(Softmax(Scaled(u, 1.0 / game.eta)));
}

double SaddleValue(const RegularizedGame& game, const SimplexPoint& x,
                   const SimplexPoint& y) {
  if (x.dim() != game.num_x_actions() || y.dim() != game.num_y_actions())
    throw InvalidInputError("saddle value: dimension mismatch");
  const std::vector<double> ax = game.payoff.Multiply(x.probs());
  double inner = 0.0;
  for (std::size_t i = 0; i < ax.size(); ++i) inner += ax[i] * y[i];
  return game.eta * Entropy(x) + inner - game.eta * Entropy(y);
}

double DualityGap(const RegularizedGame& game, const SimplexPoint& x,
                  const SimplexPoint& y) {
  const JointState state{x, y};
  return DualityGapFromResponses(game, state, SmoothedResponses(game, state));
}

double DualityGapFromResponses(const RegularizedGame& game, const JointState& state,
                               const ResponsePair& responses) {
  return game.eta * (KlDivergence(state.x.probs(), responses.v.probs()) +
                     KlDivergence(state.y.probs(), responses.s.probs()));
}

double DualityGapAlt(const RegularizedGame& game, const SimplexPoint& x,
                     const SimplexPoint& y) {
  const SimplexPoint v = LogitResponseX(game, y);
  const SimplexPoint s = LogitResponseY(game, x);
  return SaddleValue(game, x, s) - SaddleValue(game, v, y);
}

double GapUpperBound(const RegularizedGame& game) {
  const std::size_t n = game.num_x_actions();
  const std::size_t m = game.num_y_actions();
  double best = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    const SimplexPoint x = SimplexPoint::Vertex(n, j);
    for (std::size_t i = 0; i < m; ++i) {
      best = std::max(best, DualityGap(game, x, SimplexPoint::Vertex(m, i)));
    }
  }
  return best;
}

}  // namespace lfplay
