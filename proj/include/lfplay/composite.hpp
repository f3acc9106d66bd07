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
// Strongly convex composite minimization min_x l(A x) + f_x(x), where l is
// the conjugate of a strongly convex f_y over a dual set. Two solvers share
// the oracle interface: the generalized Frank-Wolfe iteration (dual point
// recomputed from the primal each step) and the fictitious-play variant that
// carries and interpolates an explicit dual iterate.

#ifndef LFPLAY_COMPOSITE_HPP_
#define LFPLAY_COMPOSITE_HPP_

#include <cstdint>
#include <functional>
#include <vector>

#include "lfplay/game.hpp"
#include "lfplay/schedules.hpp"
#include "lfplay/trace.hpp"

namespace lfplay {

// Oracle bundle for min_x max_y f_x(x) + <A x, y> - f_y(y) over closed convex
// sets, with f_x mu_x-strongly convex and f_y mu_y-strongly convex w.r.t. l1.
//
// x_oracle(c) = argmin_x <c, x> + f_x(x)
// y_oracle(u) = argmax_y <u, y> - f_y(y), the gradient of ell
// ell(u)      = max_y <u, y> - f_y(y)
// fx_value / fy_value evaluate the regularizers. fy_value is needed to
// evaluate the saddle function, and hence the duality gap, at a carried dual
// iterate.
struct CompositeProblem {
  std::function<std::vector<double>(const std::vector<double>&)> x_oracle;
  std::function<std::vector<double>(const std::vector<double>&)> y_oracle;
  std::function<double(const std::vector<double>&)> ell;
  std::function<double(const std::vector<double>&)> fx_value;
  std::function<double(const std::vector<double>&)> fy_value;
  PayoffMatrix matrix;
  double mu_x = 0.0;
  double mu_y = 0.0;
  double norm_a = 0.0;  // ||A||_{1->inf}

  // Optional replacement for the generic gap formula, for problem classes
  // where a better-conditioned evaluation exists. Receives (x, y, v, s) with
  // v = x_oracle(A^T y) and s = y_oracle(A x).
  std::function<double(const std::vector<double>&, const std::vector<double>&,
                       const std::vector<double>&, const std::vector<double>&)>
      gap_evaluator;
};

// Entropic regularization over a pair of simplices with a linear tilt on the
// primal side: f_x = eta_x * sum x ln x + <tilt, x>, f_y = eta_y * sum y ln y.
// Strong convexity moduli are eta_x and eta_y. With eta_x = eta_y and a zero
// tilt this is exactly the regularized matrix game.
struct EntropicInstance {
  EntropicInstance(PayoffMatrix matrix, double eta_x, double eta_y,
                   std::vector<double> tilt);

  PayoffMatrix matrix;
  double eta_x;
  double eta_y;
  std::vector<double> tilt;

  CompositeProblem ToProblem() const;
};

// kappa_bar = ||A||_{1->inf} / sqrt(mu_x mu_y).
double KappaBar(const CompositeProblem& problem);

// F(x) = ell(A x) + f_x(x).
double PrimalValue(const CompositeProblem& problem, const std::vector<double>& x);

// Duality gap max_y' S(x, y') - min_x' S(x', y) at a primal-dual pair.
double CompositeGap(const CompositeProblem& problem, const std::vector<double>& x,
                    const std::vector<double>& y);

// Generalized Frank-Wolfe step: s = y_oracle(A x), vbar = x_oracle(A^T s),
// x' = (1 - alpha) x + alpha vbar. No dual state is carried between steps.
std::vector<double> GfwStep(const CompositeProblem& problem, const std::vector<double>& x,
                            double alpha);

// Fictitious-play step with a carried dual iterate: v = x_oracle(A^T y) and
// s = y_oracle(A x) at the incoming pair, then both sides interpolate.
std::pair<std::vector<double>, std::vector<double>> DlfpCompositeStep(
    const CompositeProblem& problem, const std::vector<double>& x,
    const std::vector<double>& y, double alpha);

struct ComparisonResult {
  // gap column: F(x^t) - f_ref_lower, a certified primal-gap upper bound.
  Trace gfw_trace;
  // gap column: duality gap V_t; bound column: contraction^t * V_0.
  Trace dlfp_trace;
  std::vector<double> gfw_primal;   // F(x^t) along the Frank-Wolfe run
  std::vector<double> dlfp_primal;  // F(x^t) along the fictitious-play run
  double best_primal = 0.0;         // smallest F(x) seen across both runs
  double best_gap = 0.0;            // smallest duality gap certificate seen
  double f_ref_lower = 0.0;         // best_primal - best_gap <= F*
  double kappa_bar = 0.0;
};

// Runs both methods from the uniform primal point (dual iterate also uniform)
// for `iterations` steps. The optimum F* is unknown in general; it is
// bracketed as [best_primal - best_gap, best_primal] via the certificate
// V >= F(x) - F*, and the lower end anchors the Frank-Wolfe gap column.
ComparisonResult RunComparison(const CompositeProblem& problem, std::int64_t iterations,
                               const StepSchedule& gfw_schedule = StepSchedule::NesterovGfw());

}  // namespace lfplay

#endif  // LFPLAY_COMPOSITE_HPP_
