// Copyright (c) the gmxc Authors. All rights reserved.
//
// Use of this source code is governed by the Apache-2.0 license
// that can be found in the LICENSE file.

#ifndef GMX_RNG_H_
#define GMX_RNG_H_

#include <cstdint>

namespace gmx {

// Counter-based generator built on the SplitMix64 finalizer: the value at
// index i is mix(seed + (i + 1) * 0x9E3779B97F4A7C15). Any element of a
// stream can be computed directly from (seed, index), which makes noise
// tensors reproducible across implementations. The exact sequence is part
// of the repo format documentation (docs/FORMATS.md).
class CounterRng {
 public:
  explicit CounterRng(uint64_t seed) : seed_(seed) {}

  uint64_t At(uint64_t index) const {
    uint64_t z = seed_ + (index + 1) * UINT64_C(0x9E3779B97F4A7C15);
    z = (z ^ (z >> 30)) * UINT64_C(0xBF58476D1CE4E5B9);
    z = (z ^ (z >> 27)) * UINT64_C(0x94D049BB133111EB);
    return z ^ (z >> 31);
  }

  // Uniform double in [0, 1), 53 mantissa bits.
  double UnitAt(uint64_t index) const {
    return static_cast<double>(At(index) >> 11) * 0x1.0p-53;
  }

  // Uniform double in [lo, hi).
  double RangeAt(uint64_t index, double lo, double hi) const {
    return lo + (hi - lo) * UnitAt(index);
  }

  uint64_t seed() const { return seed_; }

 private:
  uint64_t seed_;
};

// Stateful convenience wrapper over CounterRng.
class SequentialRng {
 public:
  explicit SequentialRng(uint64_t seed) : rng_(seed) {}

  uint64_t NextU64() { return rng_.At(next_++); }
  double NextUnit() { return rng_.UnitAt(next_++); }
  double NextRange(double lo, double hi) { return rng_.RangeAt(next_++, lo, hi); }
  // Integer in [lo, hi] without modulo bias worth worrying about at test scale.
  int64_t NextInt(int64_t lo, int64_t hi) {
    return lo + static_cast<int64_t>(NextUnit() * static_cast<double>(hi - lo + 1));
  }

 private:
  CounterRng rng_;
  uint64_t next_ = 0;
};

}  // namespace gmx

#endif  // GMX_RNG_H_
