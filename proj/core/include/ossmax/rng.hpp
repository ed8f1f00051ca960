// Copyright 2026 The Authors.
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

#ifndef OSSMAX_RNG_HPP_
#define OSSMAX_RNG_HPP_

#include <cstdint>

namespace ossmax {

// SplitMix64 (Steele, Lea, Flood 2014). Fixed algorithm with 64-bit state so
// that seeded runs produce identical streams on every platform; the standard
// library distributions make no such promise.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t Next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform in [0, 1) with 53 random bits.
  double NextDouble() { return static_cast<double>(Next() >> 11) * 0x1.0p-53; }

  double NextInRange(double lo, double hi) {
    return lo + (hi - lo) * NextDouble();
  }

  // Uniform in {0, ..., bound - 1}; rejection sampling keeps it exact.
  int NextInt(int bound) {
    const std::uint64_t n = static_cast<std::uint64_t>(bound);
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    std::uint64_t v = Next();
    while (v >= limit) v = Next();
    return static_cast<int>(v % n);
  }

  bool NextBool() { return (Next() & 1u) != 0; }

 private:
  std::uint64_t state_;
};

}  // namespace ossmax

#endif  // OSSMAX_RNG_HPP_
