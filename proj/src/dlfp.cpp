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

#include "lfplay/dlfp.hpp"

#include <chrono>
#include <cmath>

#include "lfplay/errors.hpp"

namespace lfplay {

namespace {

std::string DescribeGame(const RegularizedGame& game) {
  return std::to_string(game.num_y_actions()) + "x" + std::to_string(game.num_x_actions()) +
         " eta=" + std::to_string(game.eta);
}

}  // namespace

JointState DlfpStep(const RegularizedGame& game, const JointState& state, double alpha) {
  if (!(alpha >= 0.0 && alpha <= 1.0))
    throw InvalidInputError("step size must lie in [0, 1]");
  const ResponsePair r = SmoothedResponses(game, state);
  return JointState{
      UncheckedSimplexPoint(Interpolate(state.x.probs(), r.v.probs(), alpha)),
      UncheckedSimplexPoint(Interpolate(state.y.probs(), r.s.probs(), alpha))};
}

Trace RunDlfp(const RegularizedGame& game, const JointState& init,
              const StepSchedule& schedule, std::int64_t iterations,
              bool record_states) {
  if (iterations < 1) throw InvalidInputError("iteration count must be >= 1");
  if (init.x.dim() != game.num_x_actions() || init.y.dim() != game.num_y_actions())
    throw InvalidInputError("initial state does not match the game dimensions");

  const auto start = std::chrono::steady_clock::now();
  Trace trace;
  trace.records.reserve(static_cast<std::size_t>(iterations) + 1);
  trace.game_description = DescribeGame(game);
  trace.schedule_name = schedule.name();

  JointState state = init;
  ResponsePair responses = SmoothedResponses(game, state);
  const double v0 = DualityGapFromResponses(game, state, responses);

  bool have_bound = true;
  RateBound bound = RateBound::Linear(0.0, 0.0);
  try {
    bound = DlfpGapBound(Kappa(game), game.eta, schedule, v0);
  } catch (const UnsupportedScheduleError&) {
    have_bound = false;
  }

  for (std::int64_t t = 0; t <= iterations; ++t) {
    TraceRecord rec;
    rec.t = t;
    rec.alpha = schedule.at(t);
    rec.gap = t == 0 ? v0 : DualityGapFromResponses(game, state, responses);
    if (have_bound && t >= 1) rec.bound = bound.Evaluate(t);
    if (record_states) rec.state = state;
    trace.records.push_back(std::move(rec));
    if (t == iterations) break;
    state = JointState{
        UncheckedSimplexPoint(Interpolate(state.x.probs(), responses.v.probs(), rec.alpha)),
        UncheckedSimplexPoint(Interpolate(state.y.probs(), responses.s.probs(), rec.alpha))};
    responses = SmoothedResponses(game, state);
  }

  trace.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return trace;
}

VerificationReport VerifyTrace(const RegularizedGame& game, const Trace& trace) {
  if (trace.records.empty()) throw InvalidInputError("empty trace");
  for (const auto& rec : trace.records)
    if (!rec.state) throw InvalidInputError("trace verification requires recorded states");

  const double kappa = Kappa(game);
  const double k2 = kappa * kappa;
  const double eta = game.eta;
  VerificationReport report;

  auto check = [&report](const char* name, std::int64_t t, double lhs, double rhs,
                         double tolerance) {
    ++report.total_checks;
    CheckResult result{name, t, lhs, rhs, rhs - lhs, lhs <= rhs + tolerance};
    if (!result.pass) {
      ++report.failed_checks;
      report.failures.push_back(std::move(result));
    }
  };

  std::vector<double> gaps(trace.records.size());
  for (std::size_t i = 0; i < trace.records.size(); ++i) {
    const auto& rec = trace.records[i];
    gaps[i] = DualityGap(game, rec.state->x, rec.state->y);
    const double tol = 1e-9 * std::max(1.0, std::fabs(gaps[i]));
    check("gap_consistency", rec.t, std::fabs(rec.gap - gaps[i]), 0.0, tol);
    if (rec.bound) check("schedule_bound", rec.t, gaps[i], *rec.bound, 1e-9 * std::max(1.0, gaps[i]));
  }

  for (std::size_t i = 0; i + 1 < trace.records.size(); ++i) {
    const double vt = gaps[i];
    const double vnext = gaps[i + 1];
    const double a = trace.records[i].alpha;
    const double tol = 1e-9 * std::max(1.0, vt);
    check("quadratic_recursion", trace.records[i].t, vnext, (1.0 - a + k2 * a * a) * vt, tol);
    check("additive_recursion", trace.records[i].t, vnext, (1.0 - a) * vt + 4.0 * a * a * eta * k2,
          tol);
  }
  return report;
}

SaddlePoint SolveFixedPoint(const RegularizedGame& game, double tol, std::int64_t max_iter) {
  if (!(tol > 0.0)) throw InvalidInputError("tolerance must be positive");
  if (max_iter < 1) throw InvalidInputError("max_iter must be >= 1");

  const double alpha = OptimalConstantStep(Kappa(game));
  JointState state = JointState::Uniform(game);

  auto assemble = [&game](const JointState& s, const ResponsePair& r, std::int64_t iters) {
    // The gap is nonnegative; its evaluation can round a hair below zero
    // once the iterate sits at the arithmetic floor.
    SaddlePoint point{s.x, s.y, L1Distance(s.x.probs(), r.v.probs()) +
                                    L1Distance(s.y.probs(), r.s.probs()),
                      std::max(DualityGapFromResponses(game, s, r), 0.0), iters};
    return point;
  };

  ResponsePair responses = SmoothedResponses(game, state);
  SaddlePoint point = assemble(state, responses, 0);
  for (std::int64_t t = 0; t < max_iter; ++t) {
    if (point.gap <= tol && point.residual <= 10.0 * tol) return point;
    state = JointState{
        UncheckedSimplexPoint(Interpolate(state.x.probs(), responses.v.probs(), alpha)),
        UncheckedSimplexPoint(Interpolate(state.y.probs(), responses.s.probs(), alpha))};
    responses = SmoothedResponses(game, state);
    point = assemble(state, responses, t + 1);
  }
  if (point.gap <= tol && point.residual <= 10.0 * tol) return point;
  throw ConvergenceError("fixed-point iteration did not reach tolerance within max_iter",
                         point);
}

}  // namespace lfplay
