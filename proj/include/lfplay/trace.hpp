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

#ifndef LFPLAY_TRACE_HPP_
#define LFPLAY_TRACE_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lfplay/game.hpp"

namespace lfplay {

// One recorded iteration of a run.
struct TraceRecord {
  std::int64_t t = 0;
  double alpha = 0.0;                 // step size applied when leaving t
  double gap = 0.0;                   // duality gap at t
  std::optional<double> bound;        // theoretical gap bound at t, when one applies
  std::optional<JointState> state;    // iterate at t, when state recording is on
};

// Per-iteration record of a single trajectory plus run metadata. Wall-clock
// time is kept for logging only and is never serialized, so identical runs
// produce identical files.
struct Trace {
  std::vector<TraceRecord> records;
  std::string game_description;
  std::string schedule_name;
  double wall_seconds = 0.0;

  const TraceRecord& back() const { return records.back(); }
};

}  // namespace lfplay

#endif  // LFPLAY_TRACE_HPP_
