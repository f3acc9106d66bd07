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

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "lfplay/composite.hpp"
#include "lfplay/dlfp.hpp"
#include "lfplay/errors.hpp"
#include "lfplay/io.hpp"
#include "lfplay/lfp.hpp"
#include "lfplay/rng.hpp"

namespace py = pybind11;
using namespace lfplay;

namespace {

RegularizedGame MakeGame(const std::vector<std::vector<double>>& rows, double eta) {
  if (rows.empty()) throw InvalidInputError("payoff matrix must be at least 1x1");
  const std::size_t m = rows.size();
  const std::size_t n = rows.front().size();
  std::vector<double> entries;
  entries.reserve(m * n);
  for (const auto& row : rows) {
    if (row.size() != n) throw InvalidInputError("payoff matrix rows have unequal lengths");
    entries.insert(entries.end(), row.begin(), row.end());
  }
  return RegularizedGame(PayoffMatrix(m, n, std::move(entries)), eta);
}

py::list TraceToList(const Trace& trace) {
  py::list out;
  for (const auto& rec : trace.records) {
    py::dict row;
    row["t"] = rec.t;
    row["alpha"] = rec.alpha;
    row["gap"] = rec.gap;
    row["bound"] = rec.bound ? py::object(py::float_(*rec.bound)) : py::none();
    out.append(std::move(row));
  }
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Smoothed fictitious play for entropy-regularized zero-sum games";

  // Base first: pybind11 runs translators newest-first, so the derived
  // classes must be registered after their base to take precedence.
  py::register_exception<Error>(m, "LfplayError", PyExc_RuntimeError);
  py::register_exception<InvalidInputError>(m, "InvalidInputError", PyExc_ValueError);
  py::register_exception<UnsupportedScheduleError>(m, "UnsupportedScheduleError",
                                                   PyExc_ValueError);
  py::register_exception<ConfigError>(m, "ConfigError", PyExc_ValueError);

  py::class_<RegularizedGame>(m, "Game")
      .def(py::init(&MakeGame), py::arg("payoff"), py::arg("eta"))
      .def_property_readonly("eta", [](const RegularizedGame& g) { return g.eta; })
      .def_property_readonly("num_x_actions", &RegularizedGame::num_x_actions)
      .def_property_readonly("num_y_actions", &RegularizedGame::num_y_actions)
      .def("kappa", [](const RegularizedGame& g) { return Kappa(g); })
      .def("gap_upper_bound", [](const RegularizedGame& g) { return GapUpperBound(g); });

  py::class_<StepSchedule>(m, "StepSchedule")
      .def_static("constant", &StepSchedule::Constant, py::arg("value"))
      .def_static("rational", &StepSchedule::Rational, py::arg("q"))
      .def_static("nesterov_gfw", &StepSchedule::NesterovGfw)
      .def_static("parse", &StepSchedule::Parse, py::arg("name"))
      .def("at", &StepSchedule::at, py::arg("t"))
      .def("name", &StepSchedule::name);

  py::class_<SaddlePoint>(m, "SaddlePoint")
      .def_property_readonly("x_star",
                             [](const SaddlePoint& p) { return p.x_star.probs(); })
      .def_property_readonly("y_star",
                             [](const SaddlePoint& p) { return p.y_star.probs(); })
      .def_readonly("residual", &SaddlePoint::residual)
      .def_readonly("gap", &SaddlePoint::gap)
      .def_readonly("iterations", &SaddlePoint::iterations);

  py::class_<LocalityEstimate>(m, "LocalityEstimate")
      .def_readonly("r_x", &LocalityEstimate::r_x)
      .def_readonly("r_y", &LocalityEstimate::r_y)
      .def_readonly("l_x", &LocalityEstimate::l_x)
      .def_readonly("l_y", &LocalityEstimate::l_y)
      .def_readonly("kappa_x", &LocalityEstimate::kappa_x)
      .def_readonly("kappa_y", &LocalityEstimate::kappa_y)
      .def_readonly("sigma2_x", &LocalityEstimate::sigma2_x)
      .def_readonly("sigma2_y", &LocalityEstimate::sigma2_y)
      .def_readonly("c_bar", &LocalityEstimate::c_bar);

  m.def(
      "logit_response_x",
      [](const RegularizedGame& game, const std::vector<double>& y) {
        return LogitResponseX(game, SimplexPoint(y)).probs();
      },
      py::arg("game"), py::arg("y"));
  m.def(
      "logit_response_y",
      [](const RegularizedGame& game, const std::vector<double>& x) {
        return LogitResponseY(game, SimplexPoint(x)).probs();
      },
      py::arg("game"), py::arg("x"));
  m.def(
      "entropy", [](const std::vector<double>& p) { return Entropy(SimplexPoint(p)); },
      py::arg("p"));
  m.def("conjugate_x", &ConjugateX, py::arg("game"), py::arg("w"));
  m.def("conjugate_y", &ConjugateY, py::arg("game"), py::arg("u"));
  m.def(
      "conjugate_grad_x",
      [](const RegularizedGame& game, const std::vector<double>& w) {
        return ConjugateGradX(game, w).probs();
      },
      py::arg("game"), py::arg("w"));
  m.def(
      "conjugate_grad_y",
      [](const RegularizedGame& game, const std::vector<double>& u) {
        return ConjugateGradY(game, u).probs();
      },
      py::arg("game"), py::arg("u"));
  m.def(
      "saddle_value",
      [](const RegularizedGame& game, const std::vector<double>& x,
         const std::vector<double>& y) {
        return SaddleValue(game, SimplexPoint(x), SimplexPoint(y));
      },
      py::arg("game"), py::arg("x"), py::arg("y"));
  m.def(
      "duality_gap",
      [](const RegularizedGame& game, const std::vector<double>& x,
         const std::vector<double>& y) {
        return DualityGap(game, SimplexPoint(x), SimplexPoint(y));
      },
      py::arg("game"), py::arg("x"), py::arg("y"));
  m.def(
      "duality_gap_alt",
      [](const RegularizedGame& game, const std::vector<double>& x,
         const std::vector<double>& y) {
        return DualityGapAlt(game, SimplexPoint(x), SimplexPoint(y));
      },
      py::arg("game"), py::arg("x"), py::arg("y"));

  m.def("optimal_constant_step", &OptimalConstantStep, py::arg("kappa"));
  m.def("contraction_factor", &ContractionFactor, py::arg("z"));
  m.def(
      "recursion_bound",
      [](double c, const StepSchedule& schedule, std::int64_t t) {
        return RecursionBound(c, schedule, t);
      },
      py::arg("c"), py::arg("schedule"), py::arg("t"));
  m.def(
      "dlfp_gap_bound",
      [](double kappa, double eta, const StepSchedule& schedule, double v0, std::int64_t t) {
        return DlfpGapBound(kappa, eta, schedule, v0).Evaluate(t);
      },
      py::arg("kappa"), py::arg("eta"), py::arg("schedule"), py::arg("v0"), py::arg("t"));

  m.def(
      "run_dlfp",
      [](const RegularizedGame& game, const StepSchedule& schedule, std::int64_t iterations) {
        return TraceToList(RunDlfp(game, JointState::Uniform(game), schedule, iterations));
      },
      py::arg("game"), py::arg("schedule"), py::arg("iterations"));
  m.def(
      "run_lfp",
      [](const RegularizedGame& game, std::size_t i0, std::size_t j0,
         const StepSchedule& schedule, std::int64_t iterations, std::uint64_t seed,
         std::int64_t stride, bool allow_constant_step) {
        return TraceToList(
            RunLfp(game, i0, j0, schedule, iterations, seed, stride, allow_constant_step));
      },
      py::arg("game"), py::arg("i0"), py::arg("j0"), py::arg("schedule"),
      py::arg("iterations"), py::arg("seed"), py::arg("stride") = 1,
      py::arg("allow_constant_step") = false);
  m.def("solve_fixed_point", &SolveFixedPoint, py::arg("game"), py::arg("tol"),
        py::arg("max_iter") = 1000000);
  m.def("locality_constants", &LocalityConstants, py::arg("game"), py::arg("saddle"),
        py::arg("sigma2_x") = 4.0, py::arg("sigma2_y") = 4.0);
  m.def(
      "monte_carlo",
      [](const RegularizedGame& game, const StepSchedule& schedule, const SaddlePoint& saddle,
         std::int64_t iterations, std::int64_t replicas, std::uint64_t seed,
         std::int64_t burn_in, double r_x, double r_y) {
        MonteCarloOptions options;
        options.iterations = iterations;
        options.replicas = replicas;
        options.seed = seed;
        options.burn_in = burn_in;
        options.r_x = r_x;
        options.r_y = r_y;
        const AggregateTrace agg = MonteCarlo(game, schedule, saddle, options);
        py::dict out;
        out["event_fraction"] = agg.event_fraction;
        py::list rows;
        for (const auto& cp : agg.checkpoints) {
          py::dict row;
          row["t"] = cp.t;
          row["mean_gap"] = cp.mean_gap;
          row["std_gap"] = cp.std_gap;
          row["ci95"] = cp.ci95_halfwidth;
          row["conditional_mean_gap"] = cp.conditional_mean_gap
                                            ? py::object(py::float_(*cp.conditional_mean_gap))
                                            : py::none();
          rows.append(std::move(row));
        }
        out["checkpoints"] = std::move(rows);
        return out;
      },
      py::arg("game"), py::arg("schedule"), py::arg("saddle"), py::arg("iterations"),
      py::arg("replicas"), py::arg("seed"), py::arg("burn_in") = 0, py::arg("r_x") = 2.0,
      py::arg("r_y") = 2.0);

  py::class_<EntropicInstance>(m, "EntropicInstance")
      .def(py::init([](const std::vector<std::vector<double>>& rows, double eta_x,
                       double eta_y, const std::vector<double>& tilt) {
             const RegularizedGame game = MakeGame(rows, 1.0);
             return EntropicInstance(game.payoff, eta_x, eta_y, tilt);
           }),
           py::arg("payoff"), py::arg("eta_x"), py::arg("eta_y"), py::arg("tilt"));
  m.def(
      "run_comparison",
      [](const EntropicInstance& instance, std::int64_t iterations) {
        const ComparisonResult result = RunComparison(instance.ToProblem(), iterations);
        py::dict out;
        out["kappa_bar"] = result.kappa_bar;
        out["best_primal"] = result.best_primal;
        out["best_gap"] = result.best_gap;
        out["f_ref_lower"] = result.f_ref_lower;
        out["dlfp"] = TraceToList(result.dlfp_trace);
        out["gfw"] = TraceToList(result.gfw_trace);
        return out;
      },
      py::arg("instance"), py::arg("iterations"));

  m.def("load_payoff", [](const std::string& source) {
    const PayoffMatrix matrix = LoadPayoff(source);
    std::vector<std::vector<double>> rows(matrix.rows(), std::vector<double>(matrix.cols()));
    for (std::size_t i = 0; i < matrix.rows(); ++i)
      for (std::size_t j = 0; j < matrix.cols(); ++j) rows[i][j] = matrix.at(i, j);
    return rows;
  });
}
