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
// Stochastic smoothed fictitious play with seeded sampling, noise
// accounting, and a Monte-Carlo replica harness for the local convergence
// behavior around the saddle point.

#ifndef LFPLAY_LFP_HPP_
#define LFPLAY_LFP_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lfplay/dlfp.hpp"
#include "lfplay/game.hpp"
#include "lfplay/rng.hpp"
#include "lfplay/schedules.hpp"
#include "lfplay/trace.hpp"

namespace lfplay {

// Player histories plus the most recent sampled action pair.
struct LfpState {
  SimplexPoint x;
  SimplexPoint y;
  std::size_t last_i = 0;  // x player's action, in [0, n)
  std::size_t last_j = 0;  // y player's action, in [0, m)

  static LfpState FromActions(const RegularizedGame& game, std::size_t i0, std::size_t j0);
};

// Realized sampling noise of one step: zeta = e_sampled - distribution.
// Each vector sums to zero and has l1 norm at most 2.
struct NoiseRecord {
  std::vector<double> zeta_x;
  std::vector<double> zeta_y;
};

// One stochastic step: computes both responses at the incoming state,
// samples i ~ v then j ~ s from the single rng stream (fixed draw order),
// and interpolates both histories toward the sampled vertices.
std::pair<LfpState, NoiseRecord> LfpStep(const RegularizedGame& game, const LfpState& state,
                                         double alpha, Xoshiro256& rng);

// Runs iterations 0..T from vertex initial histories (e_i0, e_j0), recording
// the gap at t = 0, every `checkpoint_stride`-th iteration, and t = T.
// Schedules with divergent squared step sums (constant steps) are rejected
// unless allow_constant_step is set: persistent sampling noise then keeps the
// iterates from converging.
Trace RunLfp(const RegularizedGame& game, std::size_t i0, std::size_t j0,
             const StepSchedule& schedule, std::int64_t iterations, std::uint64_t seed,
             std::int64_t checkpoint_stride = 1, bool allow_constant_step = false);

// Smoothness and noise constants valid on l1 balls around the saddle point,
// plus the resulting local rate constant:
//   r_x = min_i x*_i / 2                  (ball stays in the relative interior)
//   L_x = 2 / min_i x*_i                  (entropy Hessian bound on the ball)
//   kappa_x = L_x / eta
//   c_bar = (kappa^2 + kappa_x) eta (4 + sigma_x^2)
//         + (kappa^2 + kappa_y) eta (4 + sigma_y^2)
struct LocalityEstimate {
  double r_x = 0.0, r_y = 0.0;
  double l_x = 0.0, l_y = 0.0;
  double kappa_x = 0.0, kappa_y = 0.0;
  double sigma2_x = 4.0, sigma2_y = 4.0;
  double c_bar = 0.0;
};

// sigma^2 values default to 4, the ceiling implied by ||zeta||_1 <= 2.
LocalityEstimate LocalityConstants(const RegularizedGame& game, const SaddlePoint& saddle,
                                   double sigma2_x = 4.0, double sigma2_y = 4.0);

// Expected-gap bound inside the locality event, t steps after entering it:
//   Rational(1): c_bar (1 + ln t) / t        Rational(2): 4 c_bar / (t + 1).
double LocalExpectedGapBound(const LocalityEstimate& locality, const StepSchedule& schedule,
                             std::int64_t t);

// Empirical moments of recorded noise: mean vectors and mean squared l1 norms.
struct NoiseStats {
  double sigma2_x_hat = 0.0;
  double sigma2_y_hat = 0.0;
  std::vector<double> mean_zeta_x;
  std::vector<double> mean_zeta_y;
};
NoiseStats EstimateNoiseStats(const std::vector<NoiseRecord>& records);

// Aggregate of independent replicas. A replica belongs to "the event" when
// its trajectory stayed inside the l1 balls around the saddle point at every
// checkpoint >= burn_in; conditional means average over that fixed set.
struct AggregateCheckpoint {
  std::int64_t t = 0;
  double mean_gap = 0.0;
  double std_gap = 0.0;
  double ci95_halfwidth = 0.0;
  std::int64_t replicas_in_event = 0;
  std::optional<double> conditional_mean_gap;  // absent when the event is empty
  std::optional<double> conditional_std_gap;
};

struct AggregateTrace {
  std::vector<AggregateCheckpoint> checkpoints;
  double event_fraction = 0.0;
  // Fraction of replicas inside the balls at every checkpoint >= T, for each
  // checkpoint time T: the empirical probability that the trajectory has
  // entered the locality for good by T. Non-decreasing in T by construction.
  std::vector<std::pair<std::int64_t, double>> event_fraction_curve;
  std::uint64_t seed = 0;
  std::int64_t replicas = 0;
  std::int64_t burn_in = 0;
  std::string schedule_name;
  std::string game_description;
};

struct MonteCarloOptions {
  std::int64_t iterations = 10000;
  std::int64_t replicas = 100;
  std::uint64_t seed = 1;
  std::int64_t burn_in = 0;
  // Checkpoints: every iteration up to dense_until, then every sparse_stride.
  std::int64_t dense_until = 1000;
  std::int64_t sparse_stride = 10;
  double r_x = 2.0;  // l1 ball radii; 2 is the simplex diameter (event = everything)
  double r_y = 2.0;
  bool allow_constant_step = false;
};

// Runs independent replicas (replica r seeded with DeriveReplicaSeed(seed, r),
// initial actions drawn uniformly from the replica's own stream) and
// aggregates gaps per checkpoint. Replicas are scheduled across hardware
// threads; aggregation is by replica index, so results do not depend on the
// thread count.
AggregateTrace MonteCarlo(const RegularizedGame& game, const StepSchedule& schedule,
                          const SaddlePoint& saddle, const MonteCarloOptions& options);

// Iteration estimate for reaching an expected gap of epsilon, given the local
// constants: the tail after the (unknown) time the trajectory settles into
// the locality. The settling time itself has no available formula and is
// reported as unknown.
struct ComplexityEstimate {
  std::int64_t tail_iterations = 0;  // ceil(8 c_bar / epsilon) - 1
  double v_bar = 0.0;                // global gap bound of the game
  double delta = 0.0;                // epsilon / (2 v_bar)
  bool burn_in_known = false;        // always false; no formula exists
};
ComplexityEstimate GlobalComplexityEstimate(const RegularizedGame& game,
                                            const LocalityEstimate& locality, double epsilon);

}  // namespace lfplay

#endif  // LFPLAY_LFP_HPP_
