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

#ifndef LFPLAY_SIMPLEX_HPP_
#define LFPLAY_SIMPLEX_HPP_

#include <cstddef>
#include <vector>

namespace lfplay {

// Absolute tolerance on |sum(p) - 1| for a valid probability vector. Inputs
// violating it are rejected, never renormalized.
inline constexpr double kSimplexSumTol = 1e-12;

// A point of the probability simplex: nonnegative coordinates summing to one
// within kSimplexSumTol.
class SimplexPoint {
 public:
  // Validates and takes ownership; throws InvalidInputError on violation.
  explicit SimplexPoint(std::vector<double> probs);

  static SimplexPoint Uniform(std::size_t dim);
  static SimplexPoint Vertex(std::size_t dim, std::size_t index);

  std::size_t dim() const { return probs_.size(); }
  double operator[](std::size_t i) const { return probs_[i]; }
  const std::vector<double>& probs() const { return probs_; }

  double min_coordinate() const;

  friend bool operator==(const SimplexPoint&, const SimplexPoint&) = default;

 private:
  struct Unchecked {};
  SimplexPoint(std::vector<double> probs, Unchecked) : probs_(std::move(probs)) {}
  friend SimplexPoint UncheckedSimplexPoint(std::vector<double>);

  std::vector<double> probs_;
};

// Escape hatch for interior routines whose outputs are simplex points by
// construction (softmax, convex combinations of simplex points).
SimplexPoint UncheckedSimplexPoint(std::vector<double> probs);

// sum_i p_i ln p_i with the convention 0 ln 0 = 0. Range [-ln dim, 0].
double Entropy(const SimplexPoint& p);

// l1 distance between two vectors of equal length.
double L1Distance(const std::vector<double>& a, const std::vector<double>& b);

// softmax(w): exp(w_i - max w) / sum_j exp(w_j - max w). Strictly positive
// unless an exponent underflows (|w_i - max w| > ~745).
std::vector<double> Softmax(const std::vector<double>& w);

// log(sum_i exp(w_i)), evaluated with max subtraction.
double LogSumExp(const std::vector<double>& w);

// Kullback-Leibler divergence sum_i p_i ln(p_i / q_i), with 0 ln 0 = 0.
// Evaluated through log1p of the coordinate ratios so that the result stays
// accurate (absolute error ~ u * ||p - q||) when p is close to q; a plain
// sum of entropy and cross-entropy terms loses all digits in that regime.
double KlDivergence(const std::vector<double>& p, const std::vector<double>& q);

// (1 - alpha) * a + alpha * b, coordinate-wise.
std::vector<double> Interpolate(const std::vector<double>& a,
                                const std::vector<double>& b, double alpha);

// w * factor, coordinate-wise.
std::vector<double> Scaled(const std::vector<double>& w, double factor);

}  // namespace lfplay

#endif  // LFPLAY_SIMPLEX_HPP_
