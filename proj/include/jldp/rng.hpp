// Copyright 2026 The jldp Authors
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

#ifndef JLDP_RNG_HPP_
#define JLDP_RNG_HPP_

#include <array>
#include <cstdint>

namespace jldp {

/// Identifies one independent random stream. Equal (seed, stream) pairs
/// reproduce identical sample sequences bit-for-bit within one build.
struct RngSeed {
  std::uint64_t seed = 0;
  std::uint64_t stream = 0;

  friend bool operator==(const RngSeed&, const RngSeed&) = default;
};

/// Deterministically derives the child_id-th child stream of `parent`.
/// Children with distinct ids, and children of distinct parents, are
/// statistically independent streams.
RngSeed derive_stream(RngSeed parent, std::uint64_t child_id);

/// xoshiro256** generator, state seeded from (seed, stream) through
/// SplitMix64. Period 2^256 - 1. There is no global RNG state anywhere in
/// the library; every randomized operation takes an explicit RngSeed.
class Rng {
 public:
  explicit Rng(RngSeed id);

  std::uint64_t next_u64();

  /// Uniform on the open interval (0, 1); never returns an endpoint, so
  /// log/ratio transforms stay finite.
  double next_open01();

  /// Exact N(0, 1) draw (Marsaglia polar method).
  double next_gaussian();

 private:
  std::array<std::uint64_t, 4> state_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

}  // namespace jldp

#endif  // JLDP_RNG_HPP_
