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

#include "jldp/rng.hpp"

#include <cmath>

namespace jldp {
namespace {

constexpr std::uint64_t kGolden = 0x9e3779b97f4a7c15ULL;

// SplitMix64 finalizer.
std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::uint64_t splitmix_next(std::uint64_t& s) {
  s += kGolden;
  return mix64(s);
}

std::uint64_t rotl(std::uint64_t x, int k) {
  return (x << k) | (x >> (64 - k));
}

}  // namespace

RngSeed derive_stream(RngSeed parent, std::uint64_t child_id) {
  // Two mixing rounds; the second folds the parent stream back in so the
  // map (stream, child_id) -> child stream is not symmetric in its inputs.
  std::uint64_t s = mix64(parent.stream + kGolden * (child_id + 1));
  return RngSeed{parent.seed, mix64(s ^ parent.stream)};
}

Rng::Rng(RngSeed id) {
  std::uint64_t s = mix64(id.seed + kGolden);
  s = mix64(s ^ id.stream);
  for (auto& word : state_) {
    word = splitmix_next(s);
  }
  // xoshiro256** must not start from the all-zero state.
  if ((state_[0] | state_[1] | state_[2] | state_[3]) == 0) {
    state_[0] = kGolden;
  }
}

std::uint64_t Rng::next_u64() {
  const std::uint64_t result = rotl(state_[1] * 5, 7) * 9;
  const std::uint64_t t = state_[1] << 17;
  state_[2] ^= state_[0];
  state_[3] ^= state_[1];
  state_[1] ^= state_[2];
  state_[0] ^= state_[3];
  state_[2] ^= t;
  state_[3] = rotl(state_[3], 45);
  return result;
}

double Rng::next_open01() {
  // 53 uniform bits offset to the midpoints of the 2^-53 grid: (0, 1) open.
  return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
}

double Rng::next_gaussian() {
  if (has_spare_) {
    has_spare_ = false;
    return spare_;
  }
  double u = 0.0;
  double v = 0.0;
  double w = 0.0;
  do {
    u = 2.0 * next_open01() - 1.0;
    v = 2.0 * next_open01() - 1.0;
    w = u * u + v * v;
  } while (w >= 1.0 || w == 0.0);
  const double m = std::sqrt(-2.0 * std::log(w) / w);
  spare_ = v * m;
  has_spare_ = true;
  return u * m;
}

}  // namespace jldp
