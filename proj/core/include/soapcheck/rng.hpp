// Copyright 2026 The soapcheck Authors
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

#pragma once

#include <cstdint>

#include "soapcheck/int128.hpp"

namespace soapcheck {

/// splitmix64 finalizer. Also the documented per-test seed derivation:
/// seed_i = mix64(run_seed ^ (i * 0x9E3779B97F4A7C15)).
inline uint64_t mix64(uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

inline uint64_t derive_test_seed(uint64_t run_seed, uint64_t test_index) {
  return mix64(run_seed ^ (test_index * 0x9E3779B97F4A7C15ull));
}

/// Small deterministic generator (splitmix64 stream). The standard <random>
/// distributions are not reproducible across library implementations, so all
/// draws used in test generation go through this class instead.
class Rng {
 public:
  explicit Rng(uint64_t seed) : state_(seed) {}

  uint64_t next() {
    state_ += 0x9E3779B97F4A7C15ull;
    uint64_t x = state_;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
  }

  /// Uniform in [0, n); n must be nonzero. Lemire's multiply-shift with a
  /// rejection loop keeps the draw exactly uniform and deterministic.
  uint64_t below(uint64_t n) {
    UBigInt m = static_cast<UBigInt>(next()) * n;
    auto lo = static_cast<uint64_t>(m);
    if (lo < n) {
      uint64_t threshold = (0 - n) % n;
      while (lo < threshold) {
        m = static_cast<UBigInt>(next()) * n;
        lo = static_cast<uint64_t>(m);
      }
    }
    return static_cast<uint64_t>(m >> 64);
  }

  /// Uniform integer in the inclusive range [lo, hi]; lo <= hi required.
  /// Range widths above 2^64-1 are drawn from two words with rejection.
  BigInt int_in(BigInt lo, BigInt hi) {
    UBigInt width = static_cast<UBigInt>(hi - lo);
    if (width < ~static_cast<uint64_t>(0)) {
      return lo + static_cast<BigInt>(below(static_cast<uint64_t>(width) + 1));
    }
    UBigInt span = width + 1;  // may be 0 only if width == 2^128-1, impossible here
    int bits = 0;
    for (UBigInt w = width; w != 0; w >>= 1) ++bits;
    UBigInt mask = (bits >= 128) ? ~UBigInt{0} : ((UBigInt{1} << bits) - 1);
    for (;;) {
      UBigInt x = ((static_cast<UBigInt>(next()) << 64) | next()) & mask;
      if (x < span) return lo + static_cast<BigInt>(x);
    }
  }

  /// Uniform double in [lo, hi]; endpoints are reachable.
  double real_in(double lo, double hi) {
    double u = static_cast<double>(next() >> 11) * 0x1.0p-53;  // [0, 1)
    return lo + u * (hi - lo);
  }

  bool coin() { return (next() & 1) != 0; }

 private:
  uint64_t state_;
};

}  // namespace soapcheck
