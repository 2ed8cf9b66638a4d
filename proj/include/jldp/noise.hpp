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

#ifndef JLDP_NOISE_HPP_
#define JLDP_NOISE_HPP_

#include <cstddef>

#include "jldp/matrix.hpp"
#include "jldp/privacy_params.hpp"
#include "jldp/rng.hpp"

namespace jldp {

/// n x k matrix of i.i.d. Laplace(0, b) noise.
struct NoiseMatrix {
  Matrix values;
  double b = 0.0;

  std::size_t n() const { return values.rows(); }
  std::size_t k() const { return values.cols(); }
};

/// One Laplace(0, b) draw: inverse CDF applied to a uniform on (-1/2, 1/2).
double sample_laplace(Rng& rng, double b);

/// Deterministic given rng; b must be positive.
NoiseMatrix sample_laplace_matrix(std::size_t n, std::size_t k, double b, RngSeed rng);

/// Element-wise calibration: c = 2 sqrt(k), b = c / epsilon, sigma2 = 2 b^2,
/// failure bound min(1, d exp(-k/2)). The bound needs the data dimension d;
/// it is vacuous (clamped at 1) for small k.
PrivacyParams calibrate_element_wise(std::size_t k, double epsilon, std::size_t d);

/// Row-wise calibration: t = t_multiplier * sqrt(2 ln(2k) alpha / k),
/// c = k t, b = c / epsilon, sigma2 = 2 b^2, failure bound
/// min(1, 2k exp(-k t^2 / (2 alpha))). t_multiplier must be >= 1; at the
/// t_multiplier = 1 boundary the bound is exactly 1 and carries no guarantee.
PrivacyParams calibrate_row_wise(std::size_t k, double epsilon, double alpha,
                                 double t_multiplier);

}  // namespace jldp

#endif  // JLDP_NOISE_HPP_
