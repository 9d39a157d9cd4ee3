// Copyright 2026 The bimatrix Authors
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

#ifndef BIMATRIX_RNG_HPP_
#define BIMATRIX_RNG_HPP_

#include <cstdint>
#include <random>

namespace bimatrix {

// Finalizer of the splitmix64 generator (Steele, Lea & Flood 2014).
constexpr std::uint64_t splitmix64_mix(std::uint64_t z) noexcept {
  z ^= z >> 30;
  z *= 0xBF58476D1CE4E5B9ull;
  z ^= z >> 27;
  z *= 0x94D049BB133111EBull;
  z ^= z >> 31;
  return z;
}

constexpr std::uint64_t kSplitmix64Increment = 0x9E3779B97F4A7C15ull;

// Seed for the `index`-th substream of a batch rooted at `seed`. This is
// the (index+1)-th output of a splitmix64 stream started at `seed`, so
// substreams can be derived independently and in any order.
constexpr std::uint64_t substream_seed(std::uint64_t seed,
                                       std::uint64_t index) noexcept {
  return splitmix64_mix(seed + (index + 1) * kSplitmix64Increment);
}

// Deterministic uniform stream: std::mt19937_64 is bit-exact across
// platforms ([rand.eng.mers]), while the <random> distribution classes are
// implementation-defined and therefore not used here. Doubles take the top
// 53 bits of each draw, giving uniforms on [0, 1).
class UnitUniformRng {
 public:
  explicit UnitUniformRng(std::uint64_t seed)
      : engine_(splitmix64_mix(seed)) {}

  std::uint64_t next_u64() { return engine_(); }

  double next() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace bimatrix

#endif  // BIMATRIX_RNG_HPP_
