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

#include "lfplay/schedules.hpp"

#include <cmath>

#include "lfplay/errors.hpp"

namespace lfplay {

StepSchedule StepSchedule::Constant(double value) {
  if (!(value >= 0.0 && value <= 1.0))
    throw InvalidInputError("constant step size must lie in [0, 1]");
  return StepSchedule(Kind::kConstant, value, 0);
}

StepSchedule StepSchedule::Rational(int q) {
  if (q < 1) throw InvalidInputError("rational schedule requires q >= 1");
  return StepSchedule(Kind::kRational, 0.0, q);
}

StepSchedule StepSchedule::NesterovGfw() { return StepSchedule(Kind::kNesterovGfw, 0.0, 0); }

StepSchedule StepSchedule::Parse(const std::string& name) {
  if (name == "harmonic") return Rational(1);
  if (name == "fw") return Rational(2);
  if (name == "nesterov-gfw") return NesterovGfw();
  const auto colon = name.find(':');
  if (colon != std::string::npos) {
    const std::string head = name.substr(0, colon);
    const std::string arg = name.substr(colon + 1);
    try {
      if (head == "constant") return Constant(std::stod(arg));
      if (head == "rational") return Rational(std::stoi(arg));
    } catch (const std::logic_error&) {
      throw ConfigError("bad schedule parameter in '" + name + "'");
    }
  }
  throw ConfigError("unknown schedule '" + name +
                    "' (expected constant:<value>, harmonic, fw, rational:<q>, nesterov-gfw)");
}

double StepSchedule::at(std::int64_t t) const {
  if (t < 0) throw InvalidInputError("step index must be nonnegative");
  switch (kind_) {
    case Kind::kConstant:
      return value_;
    case Kind::kRational:
      return static_cast<double>(q_) / static_cast<double>(t + q_);
    case Kind::kNesterovGfw: {
      const double td = static_cast<double>(t);
      return 6.0 * (td + 1.0) / ((td + 2.0) * (2.0 * td + 3.0));
    }
  }
  return 0.0;  // unreachable
}

bool StepSchedule::summable_squares_with_divergent_sum() const {
  switch (kind_) {
    case Kind::kConstant:
      return false;  // squares diverge for any c > 0; c = 0 has a convergent sum
    case Kind::kRational:
      return true;
    case Kind::kNesterovGfw:
      return true;  // alpha_t ~ 3/t
  }
  return false;
}

std::string StepSchedule::name() const {
  switch (kind_) {
    case Kind::kConstant:
      return "constant:" + std::to_string(value_);
    case Kind::kRational:
      if (q_ == 1) return "harmonic";
      if (q_ == 2) return "fw";
      return "rational:" + std::to_string(q_);
    case Kind::kNesterovGfw:
      return "nesterov-gfw";
  }
  return "?";
}

RateBound RateBound::Linear(double rho, double v0) {
  return RateBound{Kind::kLinear, rho, v0, 0.0};
}
RateBound RateBound::LogOverT(double c) { return RateBound{Kind::kLogOverT, 0.0, 0.0, c}; }
RateBound RateBound::OneOverT(double c) { return RateBound{Kind::kOneOverT, 0.0, 0.0, c}; }

double RateBound::Evaluate(std::int64_t t) const {
  if (t < 1) throw InvalidInputError("rate bounds are defined for t >= 1");
  const double td = static_cast<double>(t);
  switch (kind) {
    case Kind::kLinear:
      if (rho == 0.0) return 0.0;
      return std::exp(td * std::log(rho)) * v0;
    case Kind::kLogOverT:
      return c * (1.0 + std::log(td)) / td;
    case Kind::kOneOverT:
      return 4.0 * c / (td + 1.0);
  }
  return 0.0;  // unreachable
}

double OptimalConstantStep(double kappa) {
  if (kappa < 0.0) throw InvalidInputError("kappa must be nonnegative");
  const double k2 = kappa * kappa;
  if (2.0 * k2 <= 1.0) return 1.0;
  return 1.0 / (2.0 * k2);
}

double ContractionFactor(double z) {
  if (z < 0.0) throw InvalidInputError("contraction factor argument must be nonnegative");
  if (z >= 0.5) return 1.0 - 1.0 / (4.0 * z);
  return z;
}

RateBound DlfpGapBound(double kappa, double eta, const StepSchedule& schedule, double v0) {
  const double k2 = kappa * kappa;
  switch (schedule.kind()) {
    case StepSchedule::Kind::kConstant: {
      const double opt = OptimalConstantStep(kappa);
      if (std::fabs(schedule.constant_value() - opt) > 1e-12 * opt)
        throw UnsupportedScheduleError(
            "no closed-form gap bound for a non-optimal constant step");
      return RateBound::Linear(ContractionFactor(k2), v0);
    }
    case StepSchedule::Kind::kRational:
      if (schedule.rational_q() == 1) return RateBound::LogOverT(4.0 * eta * k2);
      if (schedule.rational_q() == 2) return RateBound::OneOverT(4.0 * eta * k2);
      throw UnsupportedScheduleError("gap bound covers rational schedules with q in {1, 2}");
    case StepSchedule::Kind::kNesterovGfw:
      throw UnsupportedScheduleError("no saddle-point gap bound for the nesterov-gfw schedule");
  }
  throw UnsupportedScheduleError("unknown schedule kind");
}

double RecursionBound(double c, const StepSchedule& schedule, std::int64_t t) {
  if (c < 0.0) throw InvalidInputError("recursion bound requires c >= 0");
  if (t < 1) throw InvalidInputError("recursion bound is defined for t >= 1");
  if (schedule.kind() != StepSchedule::Kind::kRational)
    throw UnsupportedScheduleError("recursion bound covers rational schedules only");
  const int q = schedule.rational_q();
  const double td = static_cast<double>(t);
  if (q == 1) return c * (1.0 + std::log(td)) / td;
  if (q == 2) return 4.0 * c / (td + 1.0);

  // General q: telescoping with weights binom(i+q, q) gives
  //   V_t <= C * sum_{i=0}^{t-1} (q/(i+q)) binom(i+q-1, q-1) / binom(t+q-1, q).
  // The binomials are maintained as running products rather than factorials,
  // which keeps intermediate magnitudes at t^(q-1) scale.
  double binom = 1.0;  // binom(q-1, q-1) at i = 0
  double sum = 0.0;
  for (std::int64_t i = 0; i < t; ++i) {
    const double id = static_cast<double>(i);
    sum += static_cast<double>(q) / (id + q) * binom;
    // binom(i+q, q-1) = binom(i+q-1, q-1) * (i+q) / (i+1)
    binom *= (id + q) / (id + 1.0);
  }
  // At loop exit binom equals binom(t+q-1, q-1), and
  // binom(t+q-1, q) = binom(t+q-1, q-1) * t / q.
  const double denom = binom * td / static_cast<double>(q);
  return c * sum / denom;
}

StepConditionReport CheckStepSizeConditions(const StepSchedule& schedule,
                                            std::int64_t horizon) {
  if (horizon < 1) throw InvalidInputError("horizon must be >= 1");
  StepConditionReport report;
  for (std::int64_t t = 0; t < horizon; ++t) {
    const double a = schedule.at(t);
    report.sum_alpha += a;
    report.sum_alpha_sq += a * a;
  }
  report.satisfies_conditions = schedule.summable_squares_with_divergent_sum();
  if (report.satisfies_conditions) {
    report.verdict = "satisfies step-size conditions: divergent sum, square-summable";
  } else if (schedule.kind() == StepSchedule::Kind::kConstant &&
             schedule.constant_value() > 0.0) {
    report.verdict = "violates step-size conditions: squares diverge";
  } else {
    report.verdict = "violates step-size conditions";
  }
  return report;
}

}  // namespace lfplay
