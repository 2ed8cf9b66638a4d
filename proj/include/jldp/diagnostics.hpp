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

#ifndef JLDP_DIAGNOSTICS_HPP_
#define JLDP_DIAGNOSTICS_HPP_

#include "jldp/mechanism.hpp"
#include "jldp/noise.hpp"
#include "jldp/projection.hpp"

// Test and verification hooks only. The statistical checks of the
// estimator's moments and the tail bounds need the internal P and Delta of a
// release; nothing in this namespace is reachable from the data-release CLI
// paths, which keeps the no-projection-release guarantee intact in
// production use.
namespace jldp::diagnostics {

struct ReleaseTranscript {
  ReleasedMatrix released;
  ProjectionMatrix projection;
  NoiseMatrix noise;
};

/// Identical Z to release() for the same seed, plus the internals that
/// produced it.
ReleaseTranscript release_with_transcript(const DataMatrix& x,
                                          const PrivacyParams& params,
                                          RngSeed rng);

}  // namespace jldp::diagnostics

#endif  // JLDP_DIAGNOSTICS_HPP_
