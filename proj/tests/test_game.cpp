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

#include "lfplay/errors.hpp"
#include "lfplay/game.hpp"
#include "lfplay/io.hpp"
#include "lfplay/rng.hpp"
#include "oracle.hpp"

using namespace lfplay;

namespace {

RegularizedGame ZeroGame(std::size_t m, std::size_t n, double eta) {
  return RegularizedGame(PayoffMatrix(m, n, std::vector<double>(m * n, 0.0)), eta);
}

RegularizedGame MatchingPennies(double eta) {
  return RegularizedGame(PayoffMatrix(2, 2, {1.0, -1.0, -1.0, 1.0}), eta);
}

RegularizedGame RandomGame(std::size_t m, std::size_t n, double eta, std::uint64_t seed) {
  Xoshiro256 rng(seed);
  std::vector<double> entries(m * n);
  for (double& v : entries) v = rng.Uniform(-1.0, 1.0);
  return RegularizedGame(PayoffMatrix(m, n, std::move(entries)), eta);
}

SimplexPoint RandomInterior(std::size_t dim, Xoshiro256& rng, double spread = 2.0) {
  std::vector<double> w(dim);
  for (double& v : w) v = rng.Uniform(-spread, spread);
  return UncheckedSimplexPoint(Softmax(w));
}

oracle::Matrix ToOracle(const PayoffMatrix& a) {
  return oracle::Matrix{a.rows(), a.cols(), oracle::LongVec(a.entries().begin(), a.entries().end())};
}

}  // namespace

TEST_CASE("simplex point validation") {
  CHECK_NOTHROW(SimplexPoint({0.5, 0.5}));
  CHECK_NOTHROW(SimplexPoint({0.0, 1.0}));
  CHECK_THROWS_AS(SimplexPoint({0.5, 0.6}), InvalidInputError);
  CHECK_THROWS_AS(SimplexPoint({-0.1, 1.1}), InvalidInputError);
  CHECK_THROWS_AS(SimplexPoint({}), InvalidInputError);
  CHECK_THROWS_AS(SimplexPoint({0.5, std::nan("")}), InvalidInputError);
  // Violations just past the sum tolerance are rejected, not renormalized.
  CHECK_THROWS_AS(SimplexPoint({0.5, 0.5 + 3e-12}), InvalidInputError);
}

TEST_CASE("logit response x") {
  const auto uniform2 = SimplexPoint::Uniform(2);
  SUBCASE("zero payoff forces the uniform response") {
    const auto v = LogitResponseX(ZeroGame(2, 2, 1.0), uniform2);
    CHECK(v[0] == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(v[1] == doctest::Approx(0.5).epsilon(1e-15));
  }
  SUBCASE("softmax weights (1, 1/3) normalize to (3/4, 1/4)") {
    RegularizedGame game(PayoffMatrix(2, 2, {0.0, std::log(3.0), 0.0, 0.0}), 1.0);
    const auto v = LogitResponseX(game, SimplexPoint::Vertex(2, 0));
    CHECK(v[0] == doctest::Approx(0.75).epsilon(1e-15));
    CHECK(v[1] == doctest::Approx(0.25).epsilon(1e-15));
  }
  SUBCASE("frozen oracle value on random:3x4:11, eta = 0.1") {
    RegularizedGame game(LoadPayoff("random:3x4:11"), 0.1);
    const auto v = LogitResponseX(game, SimplexPoint({0.2, 0.3, 0.5}));
    // Extended-precision softmax of -A^T y / eta.
    CHECK(v[0] == doctest::Approx(0.001180225866275874).epsilon(1e-13));
    CHECK(v[1] == doctest::Approx(0.005085667012251952).epsilon(1e-13));
    CHECK(v[2] == doctest::Approx(0.0057440151124061109).epsilon(1e-13));
    CHECK(v[3] == doctest::Approx(0.98799009200906606).epsilon(1e-13));
  }
  SUBCASE("dimension mismatch") {
    CHECK_THROWS_AS(LogitResponseX(ZeroGame(3, 4, 1.0), uniform2), InvalidInputError);
  }
}

TEST_CASE("logit response y") {
  SUBCASE("zero payoff") {
    const auto s = LogitResponseY(ZeroGame(3, 2, 1.0), SimplexPoint::Uniform(2));
    for (std::size_t i = 0; i < 3; ++i) CHECK(s[i] == doctest::Approx(1.0 / 3).epsilon(1e-15));
  }
  SUBCASE("matching pennies at uniform x has Ax = 0") {
    const auto s = LogitResponseY(MatchingPennies(0.5), SimplexPoint::Uniform(2));
    CHECK(s[0] == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(s[1] == doctest::Approx(0.5).epsilon(1e-15));
  }
  SUBCASE("frozen oracle value on random:3x4:11, eta = 0.1") {
    RegularizedGame game(LoadPayoff("random:3x4:11"), 0.1);
    const auto s = LogitResponseY(game, SimplexPoint::Uniform(4));
    CHECK(s[0] == doctest::Approx(0.99388648865812754).epsilon(1e-13));
    CHECK(s[1] == doctest::Approx(2.6387964309631167e-05).epsilon(1e-12));
    CHECK(s[2] == doctest::Approx(0.0060871233775628336).epsilon(1e-13));
  }
}

TEST_CASE("entropy") {
  CHECK(Entropy(SimplexPoint::Uniform(4)) == doctest::Approx(-std::log(4.0)).epsilon(1e-15));
  CHECK(Entropy(SimplexPoint::Vertex(7, 3)) == 0.0);
  CHECK(Entropy(SimplexPoint({0.7, 0.3})) ==
        doctest::Approx(0.7 * std::log(0.7) + 0.3 * std::log(0.3)).epsilon(1e-15));
}

TEST_CASE("conjugate") {
  SUBCASE("constant vector: c + eta ln n") {
    RegularizedGame game = ZeroGame(2, 3, 0.7);
    CHECK(ConjugateX(game, {2.5, 2.5, 2.5}) ==
          doctest::Approx(2.5 + 0.7 * std::log(3.0)).epsilon(1e-15));
  }
  SUBCASE("zero vector, eta = 1, n = 2: ln 2") {
    CHECK(ConjugateX(ZeroGame(2, 2, 1.0), {0.0, 0.0}) ==
          doctest::Approx(std::log(2.0)).epsilon(1e-15));
  }
  SUBCASE("frozen logsumexp oracle at eta = 0.05") {
    RegularizedGame game = ZeroGame(2, 3, 0.05);
    CHECK(ConjugateX(game, {1.0, -1.0, 0.5}) ==
          doctest::Approx(1.0000022699449608).epsilon(1e-14));
  }
  SUBCASE("non-finite input") {
    CHECK_THROWS_AS(ConjugateX(ZeroGame(2, 2, 1.0), {1.0, std::nan("")}), InvalidInputError);
  }
  SUBCASE("the y side takes length-m inputs and mirrors the x side") {
    RegularizedGame game = ZeroGame(3, 2, 0.4);
    CHECK(ConjugateY(game, {0.0, 0.0, 0.0}) ==
          doctest::Approx(0.4 * std::log(3.0)).epsilon(1e-15));
    const auto g = ConjugateGradY(game, {0.4 * std::log(3.0), 0.0, 0.0});
    CHECK(g[0] == doctest::Approx(0.6).epsilon(1e-14));
    CHECK(g[1] == doctest::Approx(0.2).epsilon(1e-14));
    CHECK_THROWS_AS(ConjugateY(game, {0.0, 0.0}), InvalidInputError);
  }
}

TEST_CASE("conjugate gradient") {
  SUBCASE("zero input gives uniform") {
    const auto g = ConjugateGradX(ZeroGame(2, 4, 0.3), {0.0, 0.0, 0.0, 0.0});
    for (std::size_t i = 0; i < 4; ++i) CHECK(g[i] == doctest::Approx(0.25).epsilon(1e-15));
  }
  SUBCASE("(eta ln 3, 0) gives (3/4, 1/4)") {
    const double eta = 0.37;
    const auto g = ConjugateGradX(ZeroGame(2, 2, eta), {eta * std::log(3.0), 0.0});
    CHECK(g[0] == doctest::Approx(0.75).epsilon(1e-14));
    CHECK(g[1] == doctest::Approx(0.25).epsilon(1e-14));
  }
  SUBCASE("matches central differences of the conjugate, 100 draws") {
    Xoshiro256 rng(321);
    for (int draw = 0; draw < 100; ++draw) {
      const std::size_t n = 2 + rng.UniformIndex(6);
      const double eta = rng.Uniform(0.1, 2.0);
      RegularizedGame game = ZeroGame(2, n, eta);
      std::vector<double> w(n);
      for (double& v : w) v = rng.Uniform(-2.0, 2.0);
      const auto grad = ConjugateGradX(game, w);
      const auto fd = oracle::CentralDifference(
          [&game](const std::vector<double>& at) { return ConjugateX(game, at); }, w, 1e-5);
      double max_grad = 0.0, max_err = 0.0;
      for (std::size_t i = 0; i < n; ++i) {
        max_grad = std::max(max_grad, std::fabs(grad[i]));
        max_err = std::max(max_err, std::fabs(grad[i] - fd[i]));
      }
      CHECK(max_err <= 1e-6 * max_grad);
    }
  }
}

TEST_CASE("saddle value") {
  SUBCASE("zero payoff, both uniform: entropies cancel") {
    CHECK(SaddleValue(ZeroGame(2, 2, 1.0), SimplexPoint::Uniform(2), SimplexPoint::Uniform(2)) ==
          doctest::Approx(0.0).epsilon(1e-15));
  }
  SUBCASE("vertex pair picks out one payoff entry") {
    RegularizedGame game = MatchingPennies(0.9);
    CHECK(SaddleValue(game, SimplexPoint::Vertex(2, 0), SimplexPoint::Vertex(2, 0)) ==
          doctest::Approx(1.0).epsilon(1e-15));
    CHECK(SaddleValue(game, SimplexPoint::Vertex(2, 1), SimplexPoint::Vertex(2, 0)) ==
          doctest::Approx(-1.0).epsilon(1e-15));
  }
  SUBCASE("frozen oracle value on random:3x4:11") {
    RegularizedGame game(LoadPayoff("random:3x4:11"), 0.1);
    CHECK(SaddleValue(game, SimplexPoint::Uniform(4), SimplexPoint({0.2, 0.3, 0.5})) ==
          doctest::Approx(0.010305191497532345).epsilon(1e-12));
  }
}

TEST_CASE("duality gap") {
  SUBCASE("zero payoff at the unique saddle point") {
    CHECK(DualityGap(ZeroGame(2, 2, 1.0), SimplexPoint::Uniform(2), SimplexPoint::Uniform(2)) ==
          doctest::Approx(0.0).epsilon(1e-15));
  }
  SUBCASE("zero payoff at a vertex pair: 2 ln 2") {
    CHECK(DualityGap(ZeroGame(2, 2, 1.0), SimplexPoint::Vertex(2, 0), SimplexPoint::Vertex(2, 0)) ==
          doctest::Approx(2.0 * std::log(2.0)).epsilon(1e-14));
  }
  SUBCASE("matching pennies at the symmetric fixed point") {
    CHECK(DualityGap(MatchingPennies(0.5), SimplexPoint::Uniform(2), SimplexPoint::Uniform(2)) ==
          doctest::Approx(0.0).epsilon(1e-15));
  }
  SUBCASE("frozen conjugate-sum oracle value on random:3x4:11") {
    RegularizedGame game(LoadPayoff("random:3x4:11"), 0.1);
    CHECK(DualityGap(game, SimplexPoint::Uniform(4), SimplexPoint({0.2, 0.3, 0.5})) ==
          doctest::Approx(0.75976141644906919).epsilon(1e-12));
  }
}

TEST_CASE("duality gap agrees with the saddle-difference route") {
  const auto cases = {
      std::pair{ZeroGame(2, 2, 1.0), 0.0},
      std::pair{MatchingPennies(0.5), 0.0},
  };
  for (const auto& [game, expected] : cases) {
    const auto x = SimplexPoint::Uniform(game.num_x_actions());
    const auto y = SimplexPoint::Uniform(game.num_y_actions());
    CHECK(DualityGap(game, x, y) == doctest::Approx(expected).epsilon(1e-14));
    CHECK(DualityGapAlt(game, x, y) == doctest::Approx(expected).epsilon(1e-14));
  }

  Xoshiro256 rng(75);
  int kept = 0;
  while (kept < 1000) {
    const std::size_t m = 2 + rng.UniformIndex(7);
    const std::size_t n = 2 + rng.UniformIndex(7);
    RegularizedGame game = RandomGame(m, n, rng.Uniform(0.05, 1.0), rng.Next());
    const auto x = RandomInterior(n, rng);
    const auto y = RandomInterior(m, rng);
    const double gap = DualityGap(game, x, y);
    if (gap > 10.0) continue;
    ++kept;
    CHECK(std::fabs(gap - DualityGapAlt(game, x, y)) <= 1e-9);
    CHECK(gap >= -1e-12);
  }
}

TEST_CASE("kappa") {
  CHECK(Kappa(MatchingPennies(0.5)) == doctest::Approx(2.0));
  CHECK(Kappa(ZeroGame(3, 3, 0.2)) == 0.0);
  RegularizedGame game(PayoffMatrix(2, 2, {3.0, -1.5, 2.0, 0.25}), 0.1);
  CHECK(Kappa(game) == doctest::Approx(30.0));
}

TEST_CASE("gap upper bound") {
  CHECK(GapUpperBound(ZeroGame(2, 2, 1.0)) == doctest::Approx(2.0 * std::log(2.0)).epsilon(1e-14));
  CHECK(GapUpperBound(ZeroGame(5, 3, 1.0)) ==
        doctest::Approx(std::log(3.0) + std::log(5.0)).epsilon(1e-14));
  // Frozen vertex-pair enumeration in extended precision.
  CHECK(GapUpperBound(MatchingPennies(0.5)) ==
        doctest::Approx(2.0181499279178097).epsilon(1e-14));

  SUBCASE("dominates the gap at random points") {
    Xoshiro256 rng(99);
    RegularizedGame game = RandomGame(6, 5, 0.3, 1234);
    const double vbar = GapUpperBound(game);
    for (int i = 0; i < 200; ++i) {
      const auto x = RandomInterior(5, rng);
      const auto y = RandomInterior(6, rng);
      CHECK(DualityGap(game, x, y) <= vbar + 1e-12);
    }
  }
}

TEST_CASE("responses are strictly positive and sum to one") {
  Xoshiro256 rng(501);
  for (int draw = 0; draw < 200; ++draw) {
    const std::size_t m = 2 + rng.UniformIndex(9);
    const std::size_t n = 2 + rng.UniformIndex(9);
    RegularizedGame game = RandomGame(m, n, rng.Uniform(0.05, 1.0), rng.Next());
    const auto v = LogitResponseX(game, RandomInterior(m, rng));
    const auto s = LogitResponseY(game, RandomInterior(n, rng));
    double sum_v = 0.0, sum_s = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      CHECK(v[j] > 0.0);
      sum_v += v[j];
    }
    for (std::size_t i = 0; i < m; ++i) {
      CHECK(s[i] > 0.0);
      sum_s += s[i];
    }
    CHECK(std::fabs(sum_v - 1.0) <= 1e-12);
    CHECK(std::fabs(sum_s - 1.0) <= 1e-12);
  }
}

TEST_CASE("pinsker strong convexity of the scaled entropy") {
  Xoshiro256 rng(777);
  for (int draw = 0; draw < 1000; ++draw) {
    const std::size_t n = 2 + rng.UniformIndex(9);
    const double eta = rng.Uniform(0.05, 1.0);
    const auto x = RandomInterior(n, rng);
    const auto x_prime = RandomInterior(n, rng);
    double inner = 0.0;
    for (std::size_t i = 0; i < n; ++i)
      inner += (1.0 + std::log(x[i])) * (x_prime[i] - x[i]);
    const double lhs = eta * Entropy(x) + eta * inner +
                       0.5 * eta * std::pow(L1Distance(x_prime.probs(), x.probs()), 2);
    CHECK(eta * Entropy(x_prime) - lhs >= -1e-10);
  }
}

TEST_CASE("smoothness descent bound for the conjugate") {
  Xoshiro256 rng(888);
  for (int draw = 0; draw < 1000; ++draw) {
    const std::size_t n = 2 + rng.UniformIndex(9);
    const double eta = rng.Uniform(0.05, 1.0);
    RegularizedGame game = ZeroGame(2, n, eta);
    std::vector<double> w(n), w_prime(n);
    for (double& v : w) v = rng.Uniform(-2.0, 2.0);
    for (double& v : w_prime) v = rng.Uniform(-2.0, 2.0);
    const auto grad = ConjugateGradX(game, w);
    double inner = 0.0, max_diff = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      inner += grad[i] * (w_prime[i] - w[i]);
      max_diff = std::max(max_diff, std::fabs(w_prime[i] - w[i]));
    }
    const double rhs =
        ConjugateX(game, w) + inner + 0.5 / eta * max_diff * max_diff;
    CHECK(rhs - ConjugateX(game, w_prime) >= -1e-10);
  }
}

TEST_CASE("scale equivariance: (cA, c eta) preserves responses, scales the gap") {
  Xoshiro256 rng(1313);
  for (int draw = 0; draw < 50; ++draw) {
    const std::size_t m = 2 + rng.UniformIndex(5);
    const std::size_t n = 2 + rng.UniformIndex(5);
    const double eta = rng.Uniform(0.05, 1.0);
    const double c = rng.Uniform(0.1, 10.0);
    RegularizedGame game = RandomGame(m, n, eta, rng.Next());
    RegularizedGame scaled(
        PayoffMatrix(m, n, Scaled(game.payoff.entries(), c)), c * eta);
    const auto x = RandomInterior(n, rng);
    const auto y = RandomInterior(m, rng);
    const auto v1 = LogitResponseX(game, y);
    const auto v2 = LogitResponseX(scaled, y);
    const auto s1 = LogitResponseY(game, x);
    const auto s2 = LogitResponseY(scaled, x);
    for (std::size_t j = 0; j < n; ++j) CHECK(std::fabs(v1[j] - v2[j]) <= 1e-12);
    for (std::size_t i = 0; i < m; ++i) CHECK(std::fabs(s1[i] - s2[i]) <= 1e-12);
    const double g1 = DualityGap(game, x, y);
    const double g2 = DualityGap(scaled, x, y);
    CHECK(std::fabs(g2 - c * g1) <= 1e-10 * std::max(1.0, std::fabs(c * g1)));
  }
}

TEST_CASE("shift invariance: A + c * ones changes nothing") {
  Xoshiro256 rng(1414);
  for (int draw = 0; draw < 50; ++draw) {
    const std::size_t m = 2 + rng.UniformIndex(5);
    const std::size_t n = 2 + rng.UniformIndex(5);
    RegularizedGame game = RandomGame(m, n, rng.Uniform(0.05, 1.0), rng.Next());
    const double c = rng.Uniform(-2.0, 2.0);
    std::vector<double> shifted = game.payoff.entries();
    for (double& v : shifted) v += c;
    RegularizedGame shifted_game(PayoffMatrix(m, n, std::move(shifted)), game.eta);
    const auto x = RandomInterior(n, rng);
    const auto y = RandomInterior(m, rng);
    const auto v1 = LogitResponseX(game, y);
    const auto v2 = LogitResponseX(shifted_game, y);
    const auto s1 = LogitResponseY(game, x);
    const auto s2 = LogitResponseY(shifted_game, x);
    for (std::size_t j = 0; j < n; ++j) CHECK(std::fabs(v1[j] - v2[j]) <= 1e-10);
    for (std::size_t i = 0; i < m; ++i) CHECK(std::fabs(s1[i] - s2[i]) <= 1e-10);
    CHECK(std::fabs(DualityGap(game, x, y) - DualityGap(shifted_game, x, y)) <= 1e-10);
  }
}

TEST_CASE("gap evaluation matches the long-double conjugate-sum oracle") {
  Xoshiro256 rng(1515);
  for (int draw = 0; draw < 100; ++draw) {
    const std::size_t m = 2 + rng.UniformIndex(7);
    const std::size_t n = 2 + rng.UniformIndex(7);
    RegularizedGame game = RandomGame(m, n, rng.Uniform(0.05, 1.0), rng.Next());
    const auto x = RandomInterior(n, rng);
    const auto y = RandomInterior(m, rng);
    const double gap = DualityGap(game, x, y);
    const double reference = static_cast<double>(oracle::DualityGap(
        ToOracle(game.payoff), game.eta, oracle::Widen(x.probs()), oracle::Widen(y.probs())));
    CHECK(gap == doctest::Approx(reference).epsilon(1e-11));
  }
}
