// Copyright (c) the ViT-LSLA authors.
//
// This source code is licensed under the Apache License, Version 2.0
// found in the LICENSE file in the root directory of this source tree.

#pragma once

#include <cstdint>
#include <random>

namespace lsla {

/// Deterministic random source. mt19937_64 is fully specified by the
/// standard and all value transforms are implemented here rather than
/// through implementation-defined <random> distributions, so identical
/// seeds produce identical streams on every platform.
class Rng {
 public:
  explicit Rng(uint64_t seed) : seed_(seed), gen_(seed) {}

  uint64_t next_u64() { return gen_(); }

  /// Uniform in [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  /// Uniform integer in [0, n) via rejection (no modulo bias).
  int64_t uniform_int(int64_t n);

  /// Standard normal via Box-Muller; the pair's second value is cached.
  double normal();

  /// Zero-mean normal with the given stddev, resampled until within
  /// clip_sigmas standard deviations.
  double trunc_normal(double stddev, double clip_sigmas = 2.0);

  /// Independent child stream derived from (seed, stream id).
  Rng fork(uint64_t stream) const;

 private:
  uint64_t seed_;
  std::mt19937_64 gen_;
  bool has_cached_ = false;
  double cached_ = 0.0;
};

/// splitmix64 mix; used for stream derivation and seeding.
uint64_t mix_u64(uint64_t x);

}  // namespace lsla
