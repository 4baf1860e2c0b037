// Copyright 2026 The Phonoise Authors
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

#ifndef PHONOISE_RNG_H_
#define PHONOISE_RNG_H_

#include <cmath>
#include <cstdint>

namespace phonoise {

// SplitMix64. Output sequences are pinned by this implementation, never by
// the standard library, so artifacts are byte-reproducible across
// platforms and toolchains.
class SplitMix64 {
 public:
  explicit SplitMix64(uint64_t seed) : state_(seed) {}

  uint64_t next() {
    uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  // Uniform in [0, 1).
  double next_double() { return (next() >> 11) * 0x1.0p-53; }

  // Uniform in [0, n). n must be > 0; modulo bias is negligible for the
  // small bounds used here.
  uint64_t bounded(uint64_t n) { return next() % n; }

  // Knuth's algorithm; fine for the small means used here.
  int poisson(double mean) {
    double limit = std::exp(-mean);
    double p = 1.0;
    int k = 0;
    do {
      ++k;
      p *= next_double();
    } while (p > limit);
    return k - 1;
  }

 private:
  uint64_t state_;
};

}  // namespace phonoise

#endif  // PHONOISE_RNG_H_
