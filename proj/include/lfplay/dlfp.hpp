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
// Deterministic smoothed fictitious play: both players interpolate toward
// their smoothed best response to the opponent's current history. Includes
// per-iteration verification of the gap recursions and a fixed-point solver.

#ifndef LFPLAY_DLFP_HPP_
#define LFPLAY_DLFP_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "lfplay/errors.hpp"
#include "lfplay/game.hpp"
#include "lfplay/schedules.hpp"
#include "lfplay/trace.hpp"

namespace lfplay {

// One simultaneous update with step alpha in [0, 1]:
//   ((1-alpha) x + alpha P_x(y), (1-alpha) y + alpha P_y(x)),
// with both responses evaluated at the incoming state.
JointState DlfpStep(const RegularizedGame& game, const JointState& state, double alpha);

// Runs iterations 0..T and records gap, step size, and (when the schedule has
// a closed-form bound) the theoretical bound at each t >= 1. For a constant
// schedule the bound is anchored at the recorded initial gap.
Trace RunDlfp(const RegularizedGame& game, const JointState& init,
              const StepSchedule& schedule, std::int64_t iterations,
              bool record_states = false);

// Outcome of one checked inequality: pass iff lhs <= rhs + tolerance.
struct CheckResult {
  std::string check;
  std::int64_t t = 0;
  double lhs = 0.0;
  double rhs = 0.0;
  double slack = 0.0;  // rhs - lhs
  bool pass = false;
};

struct VerificationReport {
  std::vector<CheckResult> failures;  // failing checks only; all of them
  std::int64_t total_checks = 0;
  std::int64_t failed_checks = 0;
  bool all_passed() const { return failed_checks == 0; }
};

// Replays a state-recorded trace and checks, for every consecutive pair,
// with tolerance 1e-9 * max(1, V_t):
//   quadratic_recursion   V_{t+1} <= (1 - a_t + kappa^2 a_t^2) V_t
//   additive_recursion    V_{t+1} <= (1 - a_t) V_t + 4 a_t^2 eta kappa^2
//   gap_consistency       recorded gap matches the gap recomputed from the state
//   schedule_bound        V_t <= recorded bound, when a bound was recorded
VerificationReport VerifyTrace(const RegularizedGame& game, const Trace& trace);

// The unique solution of P_x(y) = x, P_y(x) = y, found by constant-step
// iteration from the uniform pair.
struct SaddlePoint {
  SimplexPoint x_star;
  SimplexPoint y_star;
  double residual = 0.0;   // ||P_x(y*) - x*||_1 + ||P_y(x*) - y*||_1
  double gap = 0.0;        // duality gap at (x*, y*)
  std::int64_t iterations = 0;
};

// Thrown when the solver exhausts max_iter; carries the best point found.
class ConvergenceError : public Error {
 public:
  ConvergenceError(const std::string& what, SaddlePoint best)
      : Error(what), best_(std::move(best)) {}
  const SaddlePoint& best() const { return best_; }

 private:
  SaddlePoint best_;
};

// Iterates with alpha = OptimalConstantStep(kappa) until both
// gap <= tol and residual <= 10 * tol, so that the returned point satisfies
// the advertised residual guarantee as well as the gap one.
SaddlePoint SolveFixedPoint(const RegularizedGame& game, double tol,
                            std::int64_t max_iter = 1000000);

}  // namespace lfplay

#endif  // LFPLAY_DLFP_HPP_
