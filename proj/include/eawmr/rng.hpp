// Copyright 2026 The eawmr Authors
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

#ifndef EAWMR_RNG_HPP_
#define EAWMR_RNG_HPP_

#include <cstdint>

namespace eawmr {

/// SplitMix64 (Vigna 2015; the mixing function of Java's
/// SplittableRandom). Pinned as the project's only random source so that
/// seeded runs reproduce bit-for-bit on every platform.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    state_ += 0x9E3779B97F4A7C15ull;
    return mix(state_);
  }

  /// Uniform in [0, 1), 53 mantissa bits.
  double next_double() { return (next_u64() >> 11) * 0x1.0p-53; }

  /// The SplitMix64 finalizer on its own; used to key derived streams.
  static std::uint64_t mix(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

 private:
  std::uint64_t state_;
};

/// Independent stream for one unit of work. Streams are keyed by
/// (seed, index) alone, so results cannot depend on execution order.
inline SplitMix64 derived_stream(std::uint64_t seed, std::uint64_t index) {
  return SplitMix64(
      SplitMix64::mix(seed ^ SplitMix64::mix(index + 0x9E3779B97F4A7C15ull)));
}

}  // namespace eawmr

#endif  // EAWMR_RNG_HPP_
