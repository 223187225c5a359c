// Copyright 2026 the sos middleware developers.
// Licensed under the Apache License, Version 2.0:
// http://www.apache.org/licenses/LICENSE-2.0

#pragma once

#include <cmath>
#include <cstdint>
#include <random>

#include "sos/util/bytes.hpp"

namespace sos {

// Deterministic random helpers over std::mt19937_64. The standard
// distributions are avoided on purpose: their output is not pinned by the
// standard, while the raw engine stream is, so identical seeds give
// identical results on every platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  /// Uniform integer in [0, n). n must be > 0.
  std::uint64_t below(std::uint64_t n) {
    // Rejection sampling keeps the result unbiased.
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    std::uint64_t r;
    do {
      r = next_u64();
    } while (r >= limit);
    return r % n;
  }

  /// Uniform integer in [lo, hi], inclusive.
  std::int64_t range(std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(
                    below(static_cast<std::uint64_t>(hi - lo) + 1));
  }

  /// Uniform double in [0, 1) with 53 bits of precision.
  double unit() { return (next_u64() >> 11) * 0x1.0p-53; }

  /// Exponentially distributed value with the given mean.
  double exponential(double mean) { return -mean * std::log1p(-unit()); }

  bool chance(double p) { return unit() < p; }

  Bytes bytes(std::size_t n) {
    Bytes out(n);
    for (auto& b : out) {
      b = static_cast<std::uint8_t>(below(256));
    }
    return out;
  }

  /// Derives an independent child stream.
  Rng fork() { return Rng(next_u64()); }

 private:
  std::mt19937_64 engine_;
};

}  // namespace sos
