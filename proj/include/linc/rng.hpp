/*
 * Copyright 2026 The linc authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <cstdint>

namespace linc {

// SplitMix64: tiny, fast, seedable, splittable generator with a fixed
// cross-platform output sequence. Every randomized construction in this
// library takes an explicit Rng (or a seed) so results are reproducible
// byte for byte.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Independent substream; used to give each trial its own generator so
  // trial k is reproducible without replaying trials 0..k-1.
  Rng split(std::uint64_t index) const {
    Rng child(state_ ^ (0x9e3779b97f4a7c15ULL * (index + 1)));
    child.next_u64();
    return child;
  }

  // Uniform integer in [lo, hi], inclusive. Uses rejection sampling so the
  // distribution is exact and the draw count per accepted value is stable.
  long long uniform_int(long long lo, long long hi) {
    std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
    std::uint64_t r;
    do {
      r = next_u64();
    } while (r >= limit);
    return lo + static_cast<long long>(r % span);
  }

 private:
  std::uint64_t state_;
};

}  // namespace linc
