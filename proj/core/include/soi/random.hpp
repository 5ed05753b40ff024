// Copyright 2026 The SOI Authors
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

#pragma once

#include <cstddef>
#include <cstdint>
#include <span>

namespace soi {

/// SplitMix64 finalizer.
constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

/// Counter-based uniform stream keyed by (seed, stream index). Draw d of
/// stream s is a pure function of (seed, s, d), so results do not depend on
/// which thread evaluates a stream or in what order.
class CounterStream {
 public:
  static constexpr std::uint64_t kGolden = 0x9e3779b97f4a7c15ULL;

  CounterStream(std::uint64_t seed, std::uint64_t stream) noexcept
      : base_(mix64(mix64(seed + kGolden) ^ mix64(stream * kGolden + 1))) {}

  std::uint64_t next_u64() noexcept {
    ++counter_;
    return mix64(base_ + counter_ * kGolden);
  }

  /// Uniform on [0, 1) with 53 random bits.
  double uniform() noexcept {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  double uniform(double lower, double upper) noexcept {
    return lower + (upper - lower) * uniform();
  }

 private:
  std::uint64_t base_;
  std::uint64_t counter_ = 0;
};

/// Pairwise (cascade) summation in a fixed tree shape; the result depends
/// only on the input sequence.
double pairwise_sum(std::span<const double> values) noexcept;

}  // namespace soi
