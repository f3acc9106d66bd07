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

#include "lfplay/simplex.hpp"

#include <algorithm>
#include <cmath>

#include "lfplay/errors.hpp"

namespace lfplay {

SimplexPoint::SimplexPoint(std::vector<double> probs) : probs_(std::move(probs)) {
  if (probs_.empty()) throw InvalidInputError("simplex point must have dimension >= 1");
  double sum = 0.0;
  for (double v : probs_) {
    if (!std::isfinite(v)) throw InvalidInputError("simplex point has a non-finite coordinate");
    if (v < 0.0) throw InvalidInputError("simplex point has a negative coordinate");
    sum += v;
  }
  if (std::fabs(sum - 1.0) > kSimplexSumTol)
    throw InvalidInputError("simplex point coordinates do not sum to 1 within 1e-12");
}

SimplexPoint SimplexPoint::Uniform(std::size_t dim) {
  if (dim == 0) throw InvalidInputError("simplex point must have dimension >= 1");
  return SimplexPoint(std::vector<double>(dim, 1.0 / static_cast<double>(dim)), Unchecked{});
}

SimplexPoint SimplexPoint::Vertex(std::size_t dim, std::size_t index) {
  if (dim == 0) throw InvalidInputError("simplex point must have dimension >= 1");
  if (index >= dim) throw InvalidInputError("vertex index out of range");
  std::vector<double> p(dim, 0.0);
  p[index] = 1.0;
  return SimplexPoint(std::move(p), Unchecked{});
}

double SimplexPoint::min_coordinate() const {
  return *std::min_element(probs_.begin(), probs_.end());
}

SimplexPoint UncheckedSimplexPoint(std::vector<double> probs) {
  return SimplexPoint(std::move(probs), SimplexPoint::Unchecked{});
}

double Entropy(const SimplexPoint& p) {
  double h = 0.0;
  for (double v : p.probs())
    if (v > 0.0) h += v * std::log(v);
  return h;
}

double L1Distance(const std::vector<double>& a, const std::vector<double>& b) {
  if (a.size() != b.size()) throw InvalidInputError("l1 distance: dimension mismatch");
  double d = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) d += std::fabs(a[i] - b[i]);
  return d;
}

std::vector<double> Softmax(const std::vector<double>& w) {
  if (w.empty()) throw InvalidInputError("softmax of an empty vector");
  const double mx = *std::max_element(w.begin(), w.end());
  if (!std::isfinite(mx)) throw NumericError("softmax input is non-finite");
  std::vector<double> out(w.size());
  double sum = 0.0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    out[i] = std::exp(w[i] - mx);
    sum += out[i];
  }
  for (double& v : out) v /= sum;
  return out;
}

double LogSumExp(const std::vector<double>& w) {
  if (w.empty()) throw InvalidInputError("logsumexp of an empty vector");
  const double mx = *std::max_element(w.begin(), w.end());
  if (!std::isfinite(mx)) throw NumericError("logsumexp input is non-finite");
  double sum = 0.0;
  for (double v : w) sum += std::exp(v - mx);
  return mx + std::log(sum);
}

double KlDivergence(const std::vector<double>& p, const std::vector<double>& q) {
  if (p.size() != q.size()) throw InvalidInputError("kl divergence: dimension mismatch");
  double d = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] <= 0.0) continue;
    if (q[i] <= 0.0) throw NumericError("kl divergence: zero reference coordinate");
    d += p[i] * std::log1p((p[i] - q[i]) / q[i]);
  }
  return d;
}

std::vector<double> Interpolate(const std::vector<double>& a,
                                const std::vector<double>& b, double alpha) {
  if (a.size() != b.size()) throw InvalidInputError("interpolate: dimension mismatch");
  std::vector<double> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = (1.0 - alpha) * a[i] + alpha * b[i];
  return out;
}

std::vector<double> Scaled(const std::vector<double>& w, double factor) {
  std::vector<double> out(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) out[i] = w[i] * factor;
  return out;
}

}  // namespace lfplay
