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
// Step-size schedules and the closed-form gap bounds attached to them.

#ifndef LFPLAY_SCHEDULES_HPP_
#define LFPLAY_SCHEDULES_HPP_

#include <cstdint>
#include <string>

namespace lfplay {

// A rule t -> alpha_t in [0, 1].
//
// Three families:
//   Constant(c)    alpha_t = c
//   Rational(q)    alpha_t = q / (t + q), q >= 1 integer; q=1 is the harmonic
//                  schedule, q=2 the classic conditional-gradient schedule
//   NesterovGfw    alpha_t = 6 (t+1) / ((t+2) (2t+3))
class StepSchedule {
 public:
  enum class Kind { kConstant, kRational, kNesterovGfw };

  static StepSchedule Constant(double value);
  static StepSchedule Rational(int q);
  static StepSchedule NesterovGfw();

  // Parses a CLI name: "constant:<value>", "harmonic", "fw", "rational:<q>",
  // "nesterov-gfw".
  static StepSchedule Parse(const std::string& name);

  Kind kind() const { return kind_; }
  double constant_value() const { return value_; }
  int rational_q() const { return q_; }

  // alpha_t for t >= 0.
  double at(std::int64_t t) const;

  // True when the infinite-horizon conditions "sum alpha_t diverges and
  // sum alpha_t^2 converges" hold; decided per family, not from partial sums.
  bool summable_squares_with_divergent_sum() const;

  std::string name() const;

  friend bool operator==(const StepSchedule&, const StepSchedule&) = default;

 private:
  StepSchedule(Kind kind, double value, int q) : kind_(kind), value_(value), q_(q) {}

  Kind kind_;
  double value_ = 0.0;
  int q_ = 0;
};

// Closed-form bound shapes for the duality gap at iteration t >= 1.
struct RateBound {
  enum class Kind { kLinear, kLogOverT, kOneOverT };

  static RateBound Linear(double rho, double v0);    // rho^t * v0
  static RateBound LogOverT(double c);               // c (1 + ln t) / t
  static RateBound OneOverT(double c);               // 4 c / (t + 1)

  double Evaluate(std::int64_t t) const;

  Kind kind;
  double rho = 0.0;
  double v0 = 0.0;
  double c = 0.0;
};

// Step value minimizing 1 - a + kappa^2 a^2 over [0, 1]: min{1/(2 kappa^2), 1}.
// Returns 1 for kappa = 0.
double OptimalConstantStep(double kappa);

// Per-step contraction factor of the gap under the optimal constant step:
//   rho(z) = 1 - 1/(4z) for z >= 1/2, and z for 0 <= z < 1/2.
// Continuous at 1/2 and strictly increasing on [0, inf), with values in [0, 1).
double ContractionFactor(double z);

// The gap bound matching a schedule, for a game with condition number kappa:
//   optimal constant step: rho(kappa^2)^t * v0
//   Rational(1):           4 eta kappa^2 (1 + ln t) / t
//   Rational(2):           16 eta kappa^2 / (t + 1)
// Throws UnsupportedScheduleError for any other schedule (including constant
// steps that differ from OptimalConstantStep(kappa)).
RateBound DlfpGapBound(double kappa, double eta, const StepSchedule& schedule, double v0);

// Bound on any nonnegative sequence following V_{t+1} <= (1 - alpha_t) V_t
// + alpha_t^2 C under the Rational(q) schedule, valid for all t >= 1:
//   q = 1:  C (1 + ln t) / t
//   q = 2:  4 C / (t + 1)
//   q > 2:  C * sum_{i=0}^{t-1} (q/(i+q)) binom(i+q-1, q-1) / binom(t+q-1, q),
// with the binomials accumulated as running floating-point products.
double RecursionBound(double c, const StepSchedule& schedule, std::int64_t t);

// Partial sums of alpha_t and alpha_t^2 up to a horizon, plus the per-family
// verdict on the infinite-horizon step-size conditions.
struct StepConditionReport {
  double sum_alpha = 0.0;
  double sum_alpha_sq = 0.0;
  bool satisfies_conditions = false;
  std::string verdict;
};
StepConditionReport CheckStepSizeConditions(const StepSchedule& schedule,
                                            std::int64_t horizon);

}  // namespace lfplay

#endif  // LFPLAY_SCHEDULES_HPP_
