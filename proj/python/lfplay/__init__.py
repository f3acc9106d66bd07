# Copyright 2026 The lfplay Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Smoothed fictitious play for entropy-regularized zero-sum games."""

from lfplay._core import (
    ConfigError,
    EntropicInstance,
    Game,
    InvalidInputError,
    LfplayError,
    LocalityEstimate,
    SaddlePoint,
    StepSchedule,
    UnsupportedScheduleError,
    conjugate_grad_x,
    conjugate_grad_y,
    conjugate_x,
    conjugate_y,
    contraction_factor,
    dlfp_gap_bound,
    duality_gap,
    duality_gap_alt,
    entropy,
    load_payoff,
    locality_constants,
    logit_response_x,
    logit_response_y,
    monte_carlo,
    optimal_constant_step,
    recursion_bound,
    run_comparison,
    run_dlfp,
    run_lfp,
    saddle_value,
    solve_fixed_point,
)

__all__ = [
    "ConfigError",
    "EntropicInstance",
    "Game",
    "InvalidInputError",
    "LfplayError",
    "LocalityEstimate",
    "SaddlePoint",
    "StepSchedule",
    "UnsupportedScheduleError",
    "conjugate_grad_x",
    "conjugate_grad_y",
    "conjugate_x",
    "conjugate_y",
    "contraction_factor",
    "dlfp_gap_bound",
    "duality_gap",
    "duality_gap_alt",
    "entropy",
    "load_payoff",
    "locality_constants",
    "logit_response_x",
    "logit_response_y",
    "monte_carlo",
    "optimal_constant_step",
    "recursion_bound",
    "run_comparison",
    "run_dlfp",
    "run_lfp",
    "saddle_value",
    "solve_fixed_point",
]
