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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "lfplay/composite.hpp"
#include "lfplay/dlfp.hpp"
#include "lfplay/errors.hpp"
#include "lfplay/io.hpp"
#include "lfplay/rng.hpp"
#include "oracle.hpp"

using namespace lfplay;

namespace {

EntropicInstance ReferenceInstance() {
  // 10x10 entries from random:10x10:2024, tilt uniform on [-0.5, 0.5] from seed 77.
  Xoshiro256 rng(77);
  std::vector<double> tilt(10);
  for (double& v : tilt) v = rng.Uniform(-0.5, 0.5);
  return EntropicInstance(LoadPayoff("random:10x10:2024"), 0.5, 0.5, std::move(tilt));
}

std::vector<double> UniformVec(std::size_t dim) {
  return std::vector<double>(dim, 1.0 / static_cast<double>(dim));
}

}  // namespace

TEST_CASE("kappa bar") {
  SUBCASE("entropic instance with equal regularization reduces to kappa") {
    EntropicInstance instance(LoadPayoff("random:4x6:3"), 0.3, 0.3,
                              std::vector<double>(6, 0.0));
    RegularizedGame game(instance.matrix, 0.3);
    CHECK(KappaBar(instance.ToProblem()) == doctest::Approx(Kappa(game)).epsilon(1e-15));
  }
  SUBCASE("hand values") {
    EntropicInstance instance(PayoffMatrix(1, 1, {2.0}), 1.0, 4.0, {0.0});
    CHECK(KappaBar(instance.ToProblem()) == doctest::Approx(1.0));
    EntropicInstance flat(PayoffMatrix(1, 1, {0.0}), 1.0, 4.0, {0.0});
    CHECK(KappaBar(flat.ToProblem()) == 0.0);
  }
}

TEST_CASE("primal value") {
  SUBCASE("zero matrix, zero tilt") {
    EntropicInstance instance(PayoffMatrix(3, 4, std::vector<double>(12, 0.0)), 0.7, 0.9,
                              std::vector<double>(4, 0.0));
    const auto problem = instance.ToProblem();
    CHECK(PrimalValue(problem, UniformVec(4)) ==
          doctest::Approx(0.9 * std::log(3.0) - 0.7 * std::log(4.0)).epsilon(1e-14));
    CHECK(PrimalValue(problem, {1.0, 0.0, 0.0, 0.0}) ==
          doctest::Approx(0.9 * std::log(3.0)).epsilon(1e-14));
  }
  SUBCASE("frozen oracle value on the reference instance") {
    const auto problem = ReferenceInstance().ToProblem();
    CHECK(PrimalValue(problem, UniformVec(10)) ==
          doctest::Approx(0.10508116045778962).epsilon(1e-13));
  }
  CHECK_THROWS_AS(PrimalValue(ReferenceInstance().ToProblem(), UniformVec(3)),
                  InvalidInputError);
}

TEST_CASE("dual oracle is the gradient of the conjugate") {
  const auto problem = ReferenceInstance().ToProblem();
  Xoshiro256 rng(11);
  for (int draw = 0; draw < 50; ++draw) {
    std::vector<double> u(10);
    for (double& v : u) v = rng.Uniform(-2.0, 2.0);
    const auto grad = problem.y_oracle(u);
    const auto fd = oracle::CentralDifference(problem.ell, u, 1e-5);
    double max_grad = 0.0, max_err = 0.0;
    for (std::size_t i = 0; i < 10; ++i) {
      max_grad = std::max(max_grad, std::fabs(grad[i]));
      max_err = std::max(max_err, std::fabs(grad[i] - fd[i]));
    }
    CHECK(max_err <= 1e-6 * max_grad);
  }
}

TEST_CASE("frank-wolfe step") {
  const auto problem = ReferenceInstance().ToProblem();
  const auto x = UniformVec(10);
  SUBCASE("alpha = 0") {
    CHECK(GfwStep(problem, x, 0.0) == x);
  }
  SUBCASE("alpha = 1 jumps to the composed oracle point") {
    const auto s = problem.y_oracle(problem.matrix.Multiply(x));
    const auto vbar = problem.x_oracle(problem.matrix.MultiplyTransposed(s));
    CHECK(GfwStep(problem, x, 1.0) == vbar);
  }
  SUBCASE("a fixed point of the composed map stays put") {
    // Iterate the composed map to (numerical) convergence, then step.
    std::vector<double> fixed = x;
    for (int k = 0; k < 2000; ++k) {
      const auto s = problem.y_oracle(problem.matrix.Multiply(fixed));
      fixed = problem.x_oracle(problem.matrix.MultiplyTransposed(s));
    }
    const auto stepped = GfwStep(problem, fixed, 0.8);
    for (std::size_t j = 0; j < 10; ++j)
      CHECK(stepped[j] == doctest::Approx(fixed[j]).epsilon(1e-12));
  }
}

TEST_CASE("composite fictitious-play step reduces to the matrix-game step") {
  const PayoffMatrix matrix = LoadPayoff("random:5x5:8");
  const double eta = 0.4;
  EntropicInstance instance(matrix, eta, eta, std::vector<double>(5, 0.0));
  const auto problem = instance.ToProblem();
  RegularizedGame game(matrix, eta);

  std::vector<double> x = UniformVec(5), y = UniformVec(5);
  JointState state = JointState::Uniform(game);
  for (int t = 0; t < 1000; ++t) {
    const double alpha = 2.0 / (t + 2.0);
    auto [nx, ny] = DlfpCompositeStep(problem, x, y, alpha);
    state = DlfpStep(game, state, alpha);
    // Bit-identical trajectories: the instance shares the game's code paths.
    for (std::size_t j = 0; j < 5; ++j) {
      CHECK(nx[j] == state.x[j]);
      CHECK(ny[j] == state.y[j]);
    }
    x = std::move(nx);
    y = std::move(ny);
  }
  CHECK(std::fabs(CompositeGap(problem, x, y) - DualityGap(game, state.x, state.y)) <= 1e-12);
}

TEST_CASE("the saddle point is a fixed point of the composite step") {
  const auto problem = ReferenceInstance().ToProblem();
  std::vector<double> x = UniformVec(10), y = UniformVec(10);
  const double alpha = std::min(1.0 / (2.0 * KappaBar(problem) * KappaBar(problem)), 1.0);
  for (int t = 0; t < 3000; ++t) std::tie(x, y) = DlfpCompositeStep(problem, x, y, alpha);
  const auto [nx, ny] = DlfpCompositeStep(problem, x, y, 0.9);
  for (std::size_t k = 0; k < 10; ++k) {
    CHECK(std::fabs(nx[k] - x[k]) <= 1e-12);
    CHECK(std::fabs(ny[k] - y[k]) <= 1e-12);
  }
}

TEST_CASE("composite gap is consistent between the generic and entropic routes") {
  const auto instance = ReferenceInstance();
  auto problem = instance.ToProblem();
  auto generic = problem;
  generic.gap_evaluator = nullptr;  // fall back to the conjugate-difference formula
  Xoshiro256 rng(14);
  for (int draw = 0; draw < 50; ++draw) {
    std::vector<double> wx(10), wy(10);
    for (double& v : wx) v = rng.Uniform(-1.0, 1.0);
    for (double& v : wy) v = rng.Uniform(-1.0, 1.0);
    const auto x = Softmax(wx);
    const auto y = Softmax(wy);
    const double a = CompositeGap(problem, x, y);
    const double b = CompositeGap(generic, x, y);
    CHECK(a == doctest::Approx(b).epsilon(1e-10));
    CHECK(a >= -1e-12);
  }
}

TEST_CASE("comparison run on the reference instance") {
  const auto problem = ReferenceInstance().ToProblem();
  const auto result = RunComparison(problem, 1000);
  const double kb2 = result.kappa_bar * result.kappa_bar;

  SUBCASE("linear convergence of the dual-interpolated run") {
    const double v0 = result.dlfp_trace.records[0].gap;
    const double rho = 1.0 - 1.0 / (4.0 * kb2);
    for (const auto& rec : result.dlfp_trace.records) {
      if (rec.t < 1) continue;
      const double bound = std::exp(double(rec.t) * std::log(rho)) * v0;
      CHECK(rec.gap <= bound + 1e-9 * std::max(1.0, rec.gap));
    }
  }
  SUBCASE("the quadratic per-step recursion holds with kappa_bar") {
    const auto& recs = result.dlfp_trace.records;
    for (std::size_t k = 0; k + 1 < recs.size(); ++k) {
      const double a = recs[k].alpha;
      CHECK(recs[k + 1].gap <=
            (1.0 - a + kb2 * a * a) * recs[k].gap + 1e-9 * std::max(1.0, recs[k].gap));
    }
  }
  SUBCASE("gap target 1e-10 is reached within the contraction estimate") {
    const double v0 = result.dlfp_trace.records[0].gap;
    const auto t_star = static_cast<std::int64_t>(
        std::ceil(std::log(v0 / 1e-10) / (-std::log1p(-1.0 / (4.0 * kb2)))));
    bool reached = false;
    for (const auto& rec : result.dlfp_trace.records)
      if (rec.t <= t_star && rec.gap <= 1e-10) reached = true;
    CHECK(reached);
  }
  SUBCASE("certificate ordering: primal gap is dominated by the duality gap") {
    for (std::size_t k = 0; k < result.dlfp_trace.records.size(); ++k) {
      CHECK(result.dlfp_primal[k] - result.f_ref_lower <=
            result.dlfp_trace.records[k].gap + 1e-9);
    }
  }
  SUBCASE("the optimum bracket is ordered and tight") {
    CHECK(result.f_ref_lower <= result.best_primal);
    CHECK(result.best_gap <= 1e-10);
  }
}

TEST_CASE("zero-matrix comparison jumps to the regularized minimizer in one step") {
  // With A = 0 the oracles are constant, so the first full step (alpha_0 = 1)
  // lands exactly on softmax(-tilt / eta_x), uniform on the dual side.
  EntropicInstance instance(PayoffMatrix(4, 4, std::vector<double>(16, 0.0)), 0.5, 0.5,
                            {0.3, -0.2, 0.1, 0.4});
  const auto result = RunComparison(instance.ToProblem(), 5);
  CHECK(result.dlfp_trace.records[0].gap > 1e-3);
  for (const auto& rec : result.dlfp_trace.records)
    if (rec.t >= 1) CHECK(std::fabs(rec.gap) <= 1e-12);
  for (const auto& rec : result.gfw_trace.records)
    if (rec.t >= 1) CHECK(std::fabs(rec.gap) <= 1e-12);
}
