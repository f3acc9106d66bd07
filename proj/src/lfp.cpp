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

#include "lfplay/lfp.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <thread>

#include "lfplay/errors.hpp"

namespace lfplay {

namespace {

std::string DescribeGame(const RegularizedGame& game) {
  return std::to_string(game.num_y_actions()) + "x" + std::to_string(game.num_x_actions()) +
         " eta=" + std::to_string(game.eta);
}

void RequireSummableSchedule(const StepSchedule& schedule, bool allow_constant_step) {
  if (schedule.summable_squares_with_divergent_sum() || allow_constant_step) return;
  throw ConfigError(
      "schedule '" + schedule.name() +
      "' has a divergent squared step sum, so sampling noise never averages out; "
      "pass the explicit constant-step override to run it anyway");
}

std::vector<std::int64_t> CheckpointTimes(std::int64_t iterations, std::int64_t dense_until,
                                          std::int64_t sparse_stride) {
  std::vector<std::int64_t> times;
  for (std::int64_t t = 0; t <= std::min(iterations, dense_until); ++t) times.push_back(t);
  for (std::int64_t t = dense_until + sparse_stride; t <= iterations; t += sparse_stride)
    times.push_back(t);
  if (times.back() != iterations) times.push_back(iterations);
  return times;
}

}  // namespace

std::size_t CategoricalIndex(const SimplexPoint& dist, double u) {
  double cumulative = 0.0;
  for (std::size_t i = 0; i + 1 < dist.dim(); ++i) {
    cumulative += dist[i];
    if (u < cumulative) return i;
  }
  return dist.dim() - 1;
}

std::size_t SampleCategorical(const SimplexPoint& dist, Xoshiro256& rng) {
  return CategoricalIndex(dist, rng.Uniform());
}

LfpState LfpState::FromActions(const RegularizedGame& game, std::size_t i0, std::size_t j0) {
  return LfpState{SimplexPoint::Vertex(game.num_x_actions(), i0),
                  SimplexPoint::Vertex(game.num_y_actions(), j0), i0, j0};
}

std::pair<LfpState, NoiseRecord> LfpStep(const RegularizedGame& game, const LfpState& state,
                                         double alpha, Xoshiro256& rng) {
  if (!(alpha >= 0.0 && alpha <= 1.0))
    throw InvalidInputError("step size must lie in [0, 1]");
  const SimplexPoint v = LogitResponseX(game, state.y);
  const SimplexPoint s = LogitResponseY(game, state.x);
  const std::size_t i = SampleCategorical(v, rng);
  const std::size_t j = SampleCategorical(s, rng);

  NoiseRecord noise;
  noise.zeta_x.resize(v.dim());
  noise.zeta_y.resize(s.dim());
  std::vector<double> x_next(v.dim()), y_next(s.dim());
  for (std::size_t k = 0; k < v.dim(); ++k) {
    const double vertex = k == i ? 1.0 : 0.0;
    noise.zeta_x[k] = vertex - v[k];
    x_next[k] = (1.0 - alpha) * state.x[k] + alpha * vertex;
  }
  for (std::size_t k = 0; k < s.dim(); ++k) {
    const double vertex = k == j ? 1.0 : 0.0;
    noise.zeta_y[k] = vertex - s[k];
    y_next[k] = (1.0 - alpha) * state.y[k] + alpha * vertex;
  }
  return {LfpState{UncheckedSimplexPoint(std::move(x_next)),
                   UncheckedSimplexPoint(std::move(y_next)), i, j},
          std::move(noise)};
}

Trace RunLfp(const RegularizedGame& game, std::size_t i0, std::size_t j0,
             const StepSchedule& schedule, std::int64_t iterations, std::uint64_t seed,
             std::int64_t checkpoint_stride, bool allow_constant_step) {
  if (iterations < 1) throw InvalidInputError("iteration count must be >= 1");
  if (checkpoint_stride < 1) throw InvalidInputError("checkpoint stride must be >= 1");
  RequireSummableSchedule(schedule, allow_constant_step);

  const auto start = std::chrono::steady_clock::now();
  Trace trace;
  trace.game_description = DescribeGame(game);
  trace.schedule_name = schedule.name();

  Xoshiro256 rng(seed);
  LfpState state = LfpState::FromActions(game, i0, j0);
  for (std::int64_t t = 0; t <= iterations; ++t) {
    if (t % checkpoint_stride == 0 || t == iterations) {
      TraceRecord rec;
      rec.t = t;
      rec.alpha = schedule.at(t);
      rec.gap = DualityGap(game, state.x, state.y);
      trace.records.push_back(std::move(rec));
    }
    if (t == iterations) break;
    state = LfpStep(game, state, schedule.at(t), rng).first;
  }

  trace.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return trace;
}

LocalityEstimate LocalityConstants(const RegularizedGame& game, const SaddlePoint& saddle,
                                   double sigma2_x, double sigma2_y) {
  const double min_x = saddle.x_star.min_coordinate();
  const double min_y = saddle.y_star.min_coordinate();
  if (!(min_x > 0.0) || !(min_y > 0.0))
    throw InvalidInputError("saddle point must be strictly interior");
  // ||zeta||_1 <= 2 caps any legitimate second moment at 4.
  if (sigma2_x < 0.0 || sigma2_y < 0.0 || sigma2_x > 4.0 || sigma2_y > 4.0)
    throw InvalidInputError("noise second moments must lie in [0, 4]");

  LocalityEstimate est;
  est.r_x = min_x / 2.0;
  est.r_y = min_y / 2.0;
  est.l_x = 2.0 / min_x;
  est.l_y = 2.0 / min_y;
  est.kappa_x = est.l_x / game.eta;
  est.kappa_y = est.l_y / game.eta;
  est.sigma2_x = sigma2_x;
  est.sigma2_y = sigma2_y;
  const double k2 = Kappa(game) * Kappa(game);
  est.c_bar = (k2 + est.kappa_x) * game.eta * (4.0 + sigma2_x) +
              (k2 + est.kappa_y) * game.eta * (4.0 + sigma2_y);
  return est;
}

double LocalExpectedGapBound(const LocalityEstimate& locality, const StepSchedule& schedule,
                             std::int64_t t) {
  if (schedule.kind() != StepSchedule::Kind::kRational ||
      (schedule.rational_q() != 1 && schedule.rational_q() != 2))
    throw UnsupportedScheduleError(
        "local expected-gap bounds cover rational schedules with q in {1, 2}");
  return RecursionBound(locality.c_bar, schedule, t);
}

NoiseStats EstimateNoiseStats(const std::vector<NoiseRecord>& records) {
  if (records.empty()) throw InvalidInputError("no noise records");
  NoiseStats stats;
  stats.mean_zeta_x.assign(records.front().zeta_x.size(), 0.0);
  stats.mean_zeta_y.assign(records.front().zeta_y.size(), 0.0);
  for (const auto& rec : records) {
    double norm_x = 0.0, norm_y = 0.0;
    for (std::size_t k = 0; k < rec.zeta_x.size(); ++k) {
      stats.mean_zeta_x[k] += rec.zeta_x[k];
      norm_x += std::fabs(rec.zeta_x[k]);
    }
    for (std::size_t k = 0; k < rec.zeta_y.size(); ++k) {
      stats.mean_zeta_y[k] += rec.zeta_y[k];
      norm_y += std::fabs(rec.zeta_y[k]);
    }
    stats.sigma2_x_hat += norm_x * norm_x;
    stats.sigma2_y_hat += norm_y * norm_y;
  }
  const double count = static_cast<double>(records.size());
  for (double& v : stats.mean_zeta_x) v /= count;
  for (double& v : stats.mean_zeta_y) v /= count;
  stats.sigma2_x_hat /= count;
  stats.sigma2_y_hat /= count;
  return stats;
}

AggregateTrace MonteCarlo(const RegularizedGame& game, const StepSchedule& schedule,
                          const SaddlePoint& saddle, const MonteCarloOptions& options) {
  if (options.replicas < 2) throw InvalidInputError("at least 2 replicas are required");
  if (options.iterations < 1) throw InvalidInputError("iteration count must be >= 1");
  RequireSummableSchedule(schedule, options.allow_constant_step);

  const std::vector<std::int64_t> times =
      CheckpointTimes(options.iterations, options.dense_until, options.sparse_stride);
  const std::size_t num_cps = times.size();
  const std::size_t num_reps = static_cast<std::size_t>(options.replicas);

  // Per-replica gap rows plus the last checkpoint time at which the replica
  // sat outside the locality balls (-1 when it never did).
  std::vector<std::vector<double>> gaps(num_reps, std::vector<double>(num_cps));
  std::vector<std::int64_t> last_exit(num_reps, -1);

  auto run_replica = [&](std::size_t r) {
    Xoshiro256 rng(DeriveReplicaSeed(options.seed, r));
    const std::size_t i0 = rng.UniformIndex(game.num_x_actions());
    const std::size_t j0 = rng.UniformIndex(game.num_y_actions());
    LfpState state = LfpState::FromActions(game, i0, j0);
    std::size_t ci = 0;
    for (std::int64_t t = 0; t <= options.iterations; ++t) {
      if (ci < num_cps && t == times[ci]) {
        gaps[r][ci] = DualityGap(game, state.x, state.y);
        if (L1Distance(state.x.probs(), saddle.x_star.probs()) > options.r_x ||
            L1Distance(state.y.probs(), saddle.y_star.probs()) > options.r_y)
          last_exit[r] = t;
        ++ci;
      }
      if (t == options.iterations) break;
      state = LfpStep(game, state, schedule.at(t), rng).first;
    }
  };

  // Replicas own their rng and output slots, so any scheduling order yields
  // the same aggregate.
  const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  const unsigned workers = static_cast<unsigned>(
      std::min<std::size_t>(hw, num_reps));
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t r = next.fetch_add(1); r < num_reps; r = next.fetch_add(1))
        run_replica(r);
    });
  }
  for (auto& th : pool) th.join();

  std::vector<bool> in_event(num_reps);
  std::int64_t event_count = 0;
  for (std::size_t r = 0; r < num_reps; ++r) {
    in_event[r] = last_exit[r] < options.burn_in;
    event_count += in_event[r];
  }

  AggregateTrace agg;
  agg.seed = options.seed;
  agg.replicas = options.replicas;
  agg.burn_in = options.burn_in;
  agg.schedule_name = schedule.name();
  agg.game_description = DescribeGame(game);
  agg.event_fraction = static_cast<double>(event_count) / static_cast<double>(num_reps);

  agg.checkpoints.reserve(num_cps);
  for (std::size_t c = 0; c < num_cps; ++c) {
    AggregateCheckpoint cp;
    cp.t = times[c];
    double sum = 0.0;
    for (std::size_t r = 0; r < num_reps; ++r) sum += gaps[r][c];
    cp.mean_gap = sum / static_cast<double>(num_reps);
    double sq = 0.0;
    for (std::size_t r = 0; r < num_reps; ++r) {
      const double d = gaps[r][c] - cp.mean_gap;
      sq += d * d;
    }
    cp.std_gap = std::sqrt(sq / static_cast<double>(num_reps - 1));
    cp.ci95_halfwidth = 1.959963984540054 * cp.std_gap / std::sqrt(static_cast<double>(num_reps));
    cp.replicas_in_event = event_count;
    if (event_count > 0) {
      double cond = 0.0;
      for (std::size_t r = 0; r < num_reps; ++r)
        if (in_event[r]) cond += gaps[r][c];
      const double cond_mean = cond / static_cast<double>(event_count);
      cp.conditional_mean_gap = cond_mean;
      if (event_count > 1) {
        double cond_sq = 0.0;
        for (std::size_t r = 0; r < num_reps; ++r) {
          if (!in_event[r]) continue;
          const double d = gaps[r][c] - cond_mean;
          cond_sq += d * d;
        }
        cp.conditional_std_gap = std::sqrt(cond_sq / static_cast<double>(event_count - 1));
      }
    }
    agg.checkpoints.push_back(std::move(cp));
  }

  agg.event_fraction_curve.reserve(num_cps);
  for (std::size_t c = 0; c < num_cps; ++c) {
    std::int64_t inside = 0;
    for (std::size_t r = 0; r < num_reps; ++r) inside += last_exit[r] < times[c];
    agg.event_fraction_curve.emplace_back(
        times[c], static_cast<double>(inside) / static_cast<double>(num_reps));
  }
  return agg;
}

ComplexityEstimate GlobalComplexityEstimate(const RegularizedGame& game,
                                            const LocalityEstimate& locality, double epsilon) {
  if (!(epsilon > 0.0)) throw InvalidInputError("epsilon must be positive");
  ComplexityEstimate est;
  est.tail_iterations =
      static_cast<std::int64_t>(std::ceil(8.0 * locality.c_bar / epsilon)) - 1;
  est.v_bar = GapUpperBound(game);
  est.delta = epsilon / (2.0 * est.v_bar);
  est.burn_in_known = false;
  return est;
}

}  // namespace lfplay
