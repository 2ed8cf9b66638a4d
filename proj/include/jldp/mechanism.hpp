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

#ifndef JLDP_MECHANISM_HPP_
#define JLDP_MECHANISM_HPP_

#include <cstddef>

#include "jldp/matrix.hpp"
#include "jldp/privacy_params.hpp"
#include "jldp/rng.hpp"

namespace jldp {

/// The private release Z = X P + Delta together with its public parameters.
/// The projection matrix P and the noise Delta are deliberately not part of
/// this type and are never serialized; releasing P would enable
/// reconstruction of the original values.
struct ReleasedMatrix {
  Matrix z;
  PrivacyParams params;

  std::size_t n() const { return z.rows(); }
  std::size_t k() const { return z.cols(); }
};

/// Runs the full release mechanism: sample P (entries N(0, 1/k)), set
/// Y = X P, add i.i.d. Laplace(0, b) noise. P uses child stream 0 of rng and
/// the noise child stream 1, so one seed reproduces a release exactly; both
/// matrices are discarded before returning. params must be calibrated.
ReleasedMatrix release(const DataMatrix& x, const PrivacyParams& params, RngSeed rng);

}  // namespace jldp

#endif  // JLDP_MECHANISM_HPP_
