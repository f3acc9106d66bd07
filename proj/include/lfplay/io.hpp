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
// Stable text formats: payoff CSV, trace CSV, aggregate CSV. All numbers are
// written as shortest round-trip decimals, so identical runs serialize to
// identical bytes and parsing recovers the exact double.

#ifndef LFPLAY_IO_HPP_
#define LFPLAY_IO_HPP_

#include <string>

#include "lfplay/dlfp.hpp"
#include "lfplay/game.hpp"
#include "lfplay/lfp.hpp"
#include "lfplay/trace.hpp"

namespace lfplay {

// Shortest decimal string that parses back to exactly the same double.
std::string FormatDouble(double value);

// Parses a payoff source: a CSV file path, or one of the builtins
//   "matching-pennies"            [[1, -1], [-1, 1]]
//   "zero:MxN"                    M x N zero matrix
//   "random:MxN:SEED"             entries uniform on [-1, 1] from the seeded rng
// Dimension separators 'x' and unicode multiplication signs are both accepted.
PayoffMatrix LoadPayoff(const std::string& source);

// Parses CSV text: one row per line, comma-separated decimal cells. Throws
// ParseError carrying the 1-based row/column of the first offending cell.
PayoffMatrix ParsePayoffCsv(const std::string& text);

std::string PayoffToCsv(const PayoffMatrix& matrix);

// Trace CSV: "iteration,step_size,gap,theory_bound", bound cell empty when
// no bound applies.
std::string TraceToCsv(const Trace& trace);

// Aggregate CSV: "iteration,mean_gap,std_gap,ci95,event_fraction,
// conditional_mean_gap"; the conditional cell is empty when no replica is in
// the event.
std::string AggregateToCsv(const AggregateTrace& aggregate);

void WriteFile(const std::string& path, const std::string& content);
std::string ReadFile(const std::string& path);

}  // namespace lfplay

#endif  // LFPLAY_IO_HPP_
