// Copyright 2026 The singlerail Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>

namespace singlerail {

// Deterministic pseudo-random stream built on SplitMix64 (Steele, Lea &
// Flood, "Fast splittable pseudorandom number generators"). The k-th output
// is a pure function of (seed, k), so runs are reproducible across
// platforms, and per-trial substreams can be derived as seed + trial_index
// without any shared state between workers.
class RandomStream {
 public:
  explicit RandomStream(std::uint64_t seed) : seed_(seed), state_(seed) {}

  std::uint64_t seed() const { return seed_; }

  std::uint64_t next_u64() {
    state_ += 0x9E3779B97F4A7C15ULL;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  // Uniform double in [0, 1) with 53 bits of randomness.
  double next_double() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  // Independent stream for trial `index`, derived as seed + index.
  RandomStream substream(std::uint64_t index) const {
    return RandomStream(seed_ + index);
  }

 private:
  std::uint64_t seed_;
  std::uint64_t state_;
};

}  // namespace singlerail
