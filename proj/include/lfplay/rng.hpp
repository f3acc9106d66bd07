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
// Deterministic random source: xoshiro256++ seeded through splitmix64.
// Both generators are published, fully specified algorithms, so seeded
// trajectories are reproducible bit-for-bit across platforms and languages
// that implement the same pair.

#ifndef LFPLAY_RNG_HPP_
#define LFPLAY_RNG_HPP_

#include <array>
#include <cstdint>

#include "lfplay/simplex.hpp"

namespace lfplay {

// splitmix64 output mixing function.
constexpr std::uint64_t SplitMix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// Derives the seed of replica `index` from a master seed. XOR keeps distinct
// replicas distinct; the splitmix64 step decorrelates neighboring indices.
constexpr std::uint64_t DeriveReplicaSeed(std::uint64_t master_seed, std::uint64_t index) {
  std::uint64_t s = master_seed ^ index;
  return SplitMix64(s);
}

class Xoshiro256 {
 public:
  explicit Xoshiro256(std::uint64_t seed) {
    std::uint64_t s = seed;
    for (auto& word : state_) word = SplitMix64(s);
  }

  std::uint64_t Next() {
    const std::uint64_t result = Rotl(state_[0] + state_[3], 23) + state_[0];
    const std::uint64_t t = state_[1] << 17;
    state_[2] ^= state_[0];
    state_[3] ^= state_[1];
    state_[1] ^= state_[2];
    state_[0] ^= state_[3];
    state_[2] ^= t;
    state_[3] = Rotl(state_[3], 45);
    return result;
  }

  // Uniform double in [0, 1) from the top 53 bits.
  double Uniform() { return static_cast<double>(Next() >> 11) * 0x1.0p-53; }

  // Uniform double in [lo, hi).
  double Uniform(double lo, double hi) { return lo + (hi - lo) * Uniform(); }

  // Uniform integer in [0, bound) by scaling; bounds here are tiny (action
  // counts), where the scaling bias is negligible and the draw stays a
  // single-uniform-consuming operation.
  std::size_t UniformIndex(std::size_t bound) {
    return static_cast<std::size_t>(Uniform() * static_cast<double>(bound));
  }

 private:
  static constexpr std::uint64_t Rotl(std::uint64_t x, int k) {
    return (x << k) | (x >> (64 - k));
  }
  std::array<std::uint64_t, 4> state_;
};

// Inverse-CDF lookup: the first index whose cumulative probability exceeds u,
// falling back to the last index when accumulated rounding leaves u uncovered.
std::size_t CategoricalIndex(const SimplexPoint& dist, double u);

// Index i with probability dist[i], consuming one uniform draw.
std::size_t SampleCategorical(const SimplexPoint& dist, Xoshiro256& rng);

}  // namespace lfplay

#endif  // LFPLAY_RNG_HPP_
