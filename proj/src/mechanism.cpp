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

#include "jldp/mechanism.hpp"

#include <stdexcept>
#include <utility>

#include "jldp/diagnostics.hpp"
#include "jldp/kernels.hpp"
#include "jldp/noise.hpp"
#include "jldp/projection.hpp"

namespace jldp {
namespace {

diagnostics::ReleaseTranscript run_mechanism(const DataMatrix& x,
                                             const PrivacyParams& params,
                                             RngSeed rng) {
  if (!params.calibrated()) {
    throw std::invalid_argument("release: params are not calibrated (use "
                                "calibrate_element_wise or calibrate_row_wise)");
  }
  ProjectionMatrix p =
      sample_projection(x.cols(), params.k, derive_stream(rng, 0));
  Matrix z = project(x, p);
  NoiseMatrix delta =
      sample_laplace_matrix(x.rows(), params.k, params.b, derive_stream(rng, 1));
  for (std::size_t i = 0; i < z.size(); ++i) {
    z.data()[i] += delta.values.data()[i];
  }
  if (!z.all_finite()) {
    throw std::overflow_error("release: output overflowed to non-finite values");
  }
  return {ReleasedMatrix{std::move(z), params}, std::move(p), std::move(delta)};
}

}  // namespace

ReleasedMatrix release(const DataMatrix& x, const PrivacyParams& params, RngSeed rng) {
  // The transcript (P and Delta) goes out of scope here and is destroyed.
  return std::move(run_mechanism(x, params, rng).released);
}

namespace diagnostics {

ReleaseTranscript release_with_transcript(const DataMatrix& x,
                                          const PrivacyParams& params,
                                          RngSeed rng) {
  return run_mechanism(x, params, rng);
}

}  // namespace diagnostics
}  // namespace jldp
