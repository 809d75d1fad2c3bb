//
// Copyright 2026 The Synaug Authors
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

#ifndef SYNAUG_RNG_H_
#define SYNAUG_RNG_H_

#include <cstdint>
#include <random>
#include <vector>

// Deterministic randomness helpers. Every generated artifact must be
// byte-identical across machines for a fixed seed, so sampling goes through
// std::mt19937_64 (whose output sequence the standard pins down) and the
// hand-rolled bounded draw below instead of std::uniform_int_distribution,
// whose mapping is implementation-defined.

namespace synaug {

// SplitMix64 step; used to derive independent per-row / per-task seeds from
// a master seed without sharing generator state across parallel workers.
inline std::uint64_t SplitMix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

inline std::uint64_t DeriveSeed(std::uint64_t seed, std::uint64_t stream) {
  return SplitMix64(seed ^ SplitMix64(stream + 1));
}

// Unbiased draw from [0, n) via rejection sampling.
inline std::uint64_t Bounded(std::mt19937_64& rng, std::uint64_t n) {
  const std::uint64_t max = std::mt19937_64::max();
  const std::uint64_t limit = max - max % n;
  std::uint64_t x = rng();
  while (x >= limit) x = rng();
  return x % n;
}

// Fisher-Yates shuffle using Bounded(); uniform over permutations.
template <typename T>
void ShuffleInPlace(std::vector<T>& items, std::mt19937_64& rng) {
  for (std::size_t i = items.size(); i > 1; --i) {
    const std::size_t j = static_cast<std::size_t>(Bounded(rng, i));
    std::swap(items[i - 1], items[j]);
  }
}

// Canonical double in [0, 1) from the top 53 bits.
inline double UnitDouble(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace synaug

#endif  // SYNAUG_RNG_H_
