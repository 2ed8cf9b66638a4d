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

#ifndef JLDP_PROJECTION_HPP_
#define JLDP_PROJECTION_HPP_

#include <cstddef>

#include "jldp/matrix.hpp"
#include "jldp/rng.hpp"

namespace jldp {

/// d x k random projection matrix with entries i.i.d. N(0, 1/k). Multiplying
/// by it preserves squared Euclidean distances in expectation.
struct ProjectionMatrix {
  Matrix values;

  std::size_t d() const { return values.rows(); }
  std::size_t k() const { return values.cols(); }
};

/// Samples a fresh projection matrix; deterministic given rng. Warns on
/// stderr when k >= d (no longer a dimensionality reduction, but still
/// mathematically valid).
ProjectionMatrix sample_projection(std::size_t d, std::size_t k, RngSeed rng);

/// Y = X P. OpenMP-parallel over rows of X, bit-identical to project_serial.
Matrix project(const DataMatrix& x, const ProjectionMatrix& p);
Matrix project_serial(const DataMatrix& x, const ProjectionMatrix& p);

/// max over rows i of ||P_i||_2.
double max_row_norm2(const ProjectionMatrix& p);

/// The distance distortion Lambda implied by inverting k = Lambda^-2 ln(n)
/// (unit-constant convention). Purely diagnostic: values above 1 mean k is
/// far too small for worst-case distance preservation, which is the normal
/// regime for the experiment settings here. Never used to block anything.
double implied_distortion(std::size_t k, std::size_t n);

}  // namespace jldp

#endif  // JLDP_PROJECTION_HPP_
