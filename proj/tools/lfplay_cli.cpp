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
// Command-line front end. Subcommands:
//   dlfp         deterministic run, trace CSV
//   lfp          stochastic run with a fixed seed, trace CSV
//   lfp-mc       Monte-Carlo replica harness, aggregate CSV
//   composite    Frank-Wolfe vs dual-interpolated run on an entropic instance
//   verify       deterministic run + per-iteration inequality checks, JSON report
//   fixed-point  saddle-point solve, JSON result
//   complexity   iteration estimate for a target expected gap, JSON result
//
// Exit codes: 0 success, 1 usage or configuration error, 2 runtime or
// numeric error, 3 verification failure.

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "lfplay/composite.hpp"
#include "lfplay/dlfp.hpp"
#include "lfplay/errors.hpp"
#include "lfplay/io.hpp"
#include "lfplay/lfp.hpp"
#include "lfplay/rng.hpp"

namespace {

using nlohmann::ordered_json;

struct RunConfig {
  std::string payoff = "matching-pennies";
  double eta = 0.5;
  double eta_x = 0.5;
  double eta_y = 0.5;
  std::string tilt = "zero";
  std::string schedule = "fw";
  std::int64_t iters = 1000;
  std::uint64_t seed = 1;
  std::int64_t replicas = 100;
  std::int64_t burn_in = 0;
  std::int64_t stride = 1;
  double tol = 1e-10;
  std::string out = "-";
  std::string event_curve_out;
  bool allow_constant_step = false;
};

void ApplyJsonConfig(const std::string& path, RunConfig& config) {
  ordered_json doc;
  try {
    doc = ordered_json::parse(lfplay::ReadFile(path));
  } catch (const nlohmann::json::parse_error& e) {
    throw lfplay::ConfigError(std::string("bad config file: ") + e.what());
  }
  if (!doc.is_object()) throw lfplay::ConfigError("config file must hold a JSON object");
  auto get = [&doc](const char* key, auto& target) {
    if (doc.contains(key)) target = doc.at(key).get<std::decay_t<decltype(target)>>();
  };
  get("payoff", config.payoff);
  get("eta", config.eta);
  get("eta_x", config.eta_x);
  get("eta_y", config.eta_y);
  get("tilt", config.tilt);
  get("schedule", config.schedule);
  get("iters", config.iters);
  get("seed", config.seed);
  get("replicas", config.replicas);
  get("burn_in", config.burn_in);
  get("stride", config.stride);
  get("tol", config.tol);
  get("out", config.out);
  get("event_curve_out", config.event_curve_out);
  get("allow_constant_step", config.allow_constant_step);
}

void Emit(const std::string& out, const std::string& content) {
  if (out == "-") {
    std::cout << content;
  } else {
    lfplay::WriteFile(out, content);
  }
}

std::vector<double> ParseTilt(const std::string& spec, std::size_t dim) {
  if (spec == "zero" || spec.empty()) return std::vector<double>(dim, 0.0);
  if (spec.rfind("random:", 0) == 0) {
    std::uint64_t seed = 0;
    try {
      seed = std::stoull(spec.substr(7));
    } catch (const std::logic_error&) {
      throw lfplay::ConfigError("bad tilt seed in '" + spec + "'");
    }
    lfplay::Xoshiro256 rng(seed);
    std::vector<double> tilt(dim);
    for (double& v : tilt) v = rng.Uniform(-0.5, 0.5);
    return tilt;
  }
  std::vector<double> tilt;
  std::size_t pos = 0;
  while (pos <= spec.size()) {
    const auto comma = spec.find(',', pos);
    const std::string cell =
        spec.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    try {
      tilt.push_back(std::stod(cell));
    } catch (const std::logic_error&) {
      throw lfplay::ConfigError("bad tilt entry '" + cell + "'");
    }
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  if (tilt.size() != dim)
    throw lfplay::ConfigError("tilt expects " + std::to_string(dim) + " entries, got " +
                              std::to_string(tilt.size()));
  return tilt;
}

ordered_json SaddleToJson(const lfplay::SaddlePoint& point) {
  ordered_json doc;
  doc["x_star"] = point.x_star.probs();
  doc["y_star"] = point.y_star.probs();
  doc["residual"] = point.residual;
  doc["gap"] = point.gap;
  doc["iterations"] = point.iterations;
  return doc;
}

int RunDlfpCommand(const RunConfig& config) {
  lfplay::RegularizedGame game(lfplay::LoadPayoff(config.payoff), config.eta);
  const auto schedule = lfplay::StepSchedule::Parse(config.schedule);
  const auto trace = lfplay::RunDlfp(game, lfplay::JointState::Uniform(game), schedule,
                                     config.iters);
  Emit(config.out, lfplay::TraceToCsv(trace));
  return 0;
}

int RunLfpCommand(const RunConfig& config) {
  lfplay::RegularizedGame game(lfplay::LoadPayoff(config.payoff), config.eta);
  const auto schedule = lfplay::StepSchedule::Parse(config.schedule);
  const auto trace = lfplay::RunLfp(game, 0, 0, schedule, config.iters, config.seed,
                                    config.stride, config.allow_constant_step);
  Emit(config.out, lfplay::TraceToCsv(trace));
  return 0;
}

int RunMonteCarloCommand(const RunConfig& config) {
  lfplay::RegularizedGame game(lfplay::LoadPayoff(config.payoff), config.eta);
  const auto schedule = lfplay::StepSchedule::Parse(config.schedule);
  const auto saddle = lfplay::SolveFixedPoint(game, config.tol);
  const auto locality = lfplay::LocalityConstants(game, saddle);
  lfplay::MonteCarloOptions options;
  options.iterations = config.iters;
  options.replicas = config.replicas;
  options.seed = config.seed;
  options.burn_in = config.burn_in;
  options.sparse_stride = config.stride;
  options.r_x = locality.r_x;
  options.r_y = locality.r_y;
  options.allow_constant_step = config.allow_constant_step;
  const auto aggregate = lfplay::MonteCarlo(game, schedule, saddle, options);
  Emit(config.out, lfplay::AggregateToCsv(aggregate));
  if (!config.event_curve_out.empty()) {
    std::string curve = "iteration,event_fraction\n";
    for (const auto& [t, fraction] : aggregate.event_fraction_curve) {
      curve += std::to_string(t);
      curve += ',';
      curve += lfplay::FormatDouble(fraction);
      curve += '\n';
    }
    lfplay::WriteFile(config.event_curve_out, curve);
  }
  return 0;
}

int RunCompositeCommand(const RunConfig& config) {
  lfplay::PayoffMatrix matrix = lfplay::LoadPayoff(config.payoff);
  const lfplay::EntropicInstance instance(matrix, config.eta_x, config.eta_y,
                                          ParseTilt(config.tilt, matrix.cols()));
  const auto result = lfplay::RunComparison(instance.ToProblem(), config.iters);
  if (config.out == "-")
    throw lfplay::ConfigError("composite mode writes multiple files; pass --out PREFIX");
  lfplay::WriteFile(config.out + "_dlfp.csv", lfplay::TraceToCsv(result.dlfp_trace));
  lfplay::WriteFile(config.out + "_gfw.csv", lfplay::TraceToCsv(result.gfw_trace));
  ordered_json summary;
  summary["kappa_bar"] = result.kappa_bar;
  summary["best_primal"] = result.best_primal;
  summary["best_gap"] = result.best_gap;
  summary["f_ref_lower"] = result.f_ref_lower;
  summary["optimum_bracket"] = {result.f_ref_lower, result.best_primal};
  lfplay::WriteFile(config.out + "_summary.json", summary.dump(2) + "\n");
  return 0;
}

int RunVerifyCommand(const RunConfig& config) {
  lfplay::RegularizedGame game(lfplay::LoadPayoff(config.payoff), config.eta);
  const auto schedule = lfplay::StepSchedule::Parse(config.schedule);
  const auto trace = lfplay::RunDlfp(game, lfplay::JointState::Uniform(game), schedule,
                                     config.iters, /*record_states=*/true);
  const auto report = lfplay::VerifyTrace(game, trace);
  ordered_json doc;
  doc["game"] = trace.game_description;
  doc["schedule"] = trace.schedule_name;
  doc["iterations"] = config.iters;
  doc["total_checks"] = report.total_checks;
  doc["failed_checks"] = report.failed_checks;
  doc["all_passed"] = report.all_passed();
  doc["failures"] = ordered_json::array();
  for (const auto& failure : report.failures) {
    ordered_json item;
    item["check"] = failure.check;
    item["t"] = failure.t;
    item["lhs"] = failure.lhs;
    item["rhs"] = failure.rhs;
    item["slack"] = failure.slack;
    doc["failures"].push_back(std::move(item));
  }
  Emit(config.out, doc.dump(2) + "\n");
  return report.all_passed() ? 0 : 3;
}

int RunFixedPointCommand(const RunConfig& config) {
  lfplay::RegularizedGame game(lfplay::LoadPayoff(config.payoff), config.eta);
  const auto point = lfplay::SolveFixedPoint(game, config.tol);
  Emit(config.out, SaddleToJson(point).dump(2) + "\n");
  return 0;
}

int RunComplexityCommand(const RunConfig& config) {
  lfplay::RegularizedGame game(lfplay::LoadPayoff(config.payoff), config.eta);
  const auto saddle = lfplay::SolveFixedPoint(game, 1e-10);
  const auto locality = lfplay::LocalityConstants(game, saddle);
  const auto estimate = lfplay::GlobalComplexityEstimate(game, locality, config.tol);
  ordered_json doc;
  doc["epsilon"] = config.tol;
  doc["c_bar"] = locality.c_bar;
  doc["tail_iterations"] = estimate.tail_iterations;
  doc["v_bar"] = estimate.v_bar;
  doc["delta"] = estimate.delta;
  // No formula bounds the settling time into the locality; it is reported as
  // unknown rather than guessed.
  doc["burn_in_iterations"] = "unknown";
  Emit(config.out, doc.dump(2) + "\n");
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Smoothed fictitious play for entropy-regularized zero-sum games"};
  app.require_subcommand(1);

  RunConfig config;
  std::string config_path;

  // Config file values are applied first; explicitly passed flags win.
  for (int i = 1; i + 1 < argc; ++i) {
    if (std::string(argv[i]) == "--config") {
      config_path = argv[i + 1];
      break;
    }
  }

  try {
    if (!config_path.empty()) ApplyJsonConfig(config_path, config);
  } catch (const lfplay::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }

  auto add_common = [&config, &config_path](CLI::App* cmd) {
    cmd->add_option("--config", config_path, "JSON config file; flags override its values");
    cmd->add_option("--payoff", config.payoff,
                    "payoff CSV path or builtin (matching-pennies, zero:MxN, random:MxN:SEED)");
    cmd->add_option("--schedule", config.schedule,
                    "constant:<v>, harmonic, fw, rational:<q>, nesterov-gfw");
    cmd->add_option("--iters", config.iters, "iteration count");
    cmd->add_option("--seed", config.seed, "rng seed");
    cmd->add_option("--replicas", config.replicas, "Monte-Carlo replica count");
    cmd->add_option("--burn-in", config.burn_in, "locality event start time");
    cmd->add_option("--stride", config.stride, "checkpoint stride");
    cmd->add_option("--tol", config.tol, "tolerance / target accuracy");
    cmd->add_option("--out", config.out, "output path ('-' = stdout)");
    cmd->add_flag("--allow-constant-step", config.allow_constant_step,
                  "permit constant steps in stochastic runs");
  };
  auto add_eta = [&config](CLI::App* cmd) {
    cmd->add_option("--eta", config.eta, "regularization strength");
  };

  CLI::App* dlfp = app.add_subcommand("dlfp", "deterministic run, trace CSV");
  add_common(dlfp);
  add_eta(dlfp);
  CLI::App* lfp = app.add_subcommand("lfp", "stochastic run, trace CSV");
  add_common(lfp);
  add_eta(lfp);
  CLI::App* mc = app.add_subcommand("lfp-mc", "Monte-Carlo replica harness, aggregate CSV");
  add_common(mc);
  add_eta(mc);
  mc->add_option("--event-curve-out", config.event_curve_out,
                 "also write the (T, event fraction) curve to this path");
  CLI::App* composite = app.add_subcommand(
      "composite", "Frank-Wolfe vs dual-interpolated run on an entropic instance");
  add_common(composite);
  composite->add_option("--eta-x", config.eta_x, "primal regularization");
  composite->add_option("--eta-y", config.eta_y, "dual regularization");
  composite->add_option("--tilt", config.tilt,
                        "primal linear term: zero, random:SEED, or comma list");
  CLI::App* verify = app.add_subcommand("verify", "run + per-iteration checks, JSON report");
  add_common(verify);
  add_eta(verify);
  CLI::App* fixed_point = app.add_subcommand("fixed-point", "saddle-point solve, JSON");
  add_common(fixed_point);
  add_eta(fixed_point);
  CLI::App* complexity =
      app.add_subcommand("complexity", "iterations for a target expected gap, JSON");
  add_common(complexity);
  add_eta(complexity);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  try {
    if (dlfp->parsed()) return RunDlfpCommand(config);
    if (lfp->parsed()) return RunLfpCommand(config);
    if (mc->parsed()) return RunMonteCarloCommand(config);
    if (composite->parsed()) return RunCompositeCommand(config);
    if (verify->parsed()) return RunVerifyCommand(config);
    if (fixed_point->parsed()) return RunFixedPointCommand(config);
    if (complexity->parsed()) return RunComplexityCommand(config);
  } catch (const lfplay::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 1;
  } catch (const lfplay::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 1;
  } catch (const lfplay::InvalidInputError& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return 1;
  } catch (const lfplay::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 1;
}
