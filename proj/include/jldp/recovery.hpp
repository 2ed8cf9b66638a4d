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

#ifndef JLDP_RECOVERY_HPP_
#define JLDP_RECOVERY_HPP_

#include <cstddef>
#include <span>

#include "jldp/matrix.hpp"
#include "jldp/mechanism.hpp"

namespace jldp {

/// Debiased squared-distance estimate ||Z_i - Z_j||^2 - 2 k sigma2 between
/// two released rows. The raw estimate is unbiased and may be negative;
/// clamped() is the convenience form for consumers that need a metric input
/// (clamping biases the estimate, so the core value is never clamped).
struct RecoveredDistance {
  double estimate = 0.0;
  std::size_t k = 0;
  double sigma2 = 0.0;

  double clamped() const { return estimate < 0.0 ? 0.0 : estimate; }
};

RecoveredDistance recover_distance(std::span<const double> zi,
                                   std::span<const double> zj,
                                   std::size_t k, double sigma2);

/// Closed-form variance of the recovered distance at true squared distance
/// dist2, split into its three mutually uncorrelated components. The cross
/// coefficient in `total` is the Monte-Carlo-confirmed 8 sigma2 (the
/// difference of two independent noise vectors has per-entry variance
/// 2 sigma2); `uncorrected_total` keeps the 4 sigma2 variant with its
/// -2 k sigma2 shift for side-by-side reporting, and is not used anywhere.
struct VarianceReport {
  double var_projection = 0.0;     ///< (2/k) dist2^2
  double var_noise = 0.0;          ///< 14 k sigma2^2
  double var_cross = 0.0;          ///< 8 sigma2 dist2
  double total = 0.0;              ///< sum of the three components
  double uncorrected_total = 0.0;  ///< (2/k) dist2^2 + 2k(7 sigma2^2 - sigma2) + 4 sigma2 dist2
};

VarianceReport analytic_variance(double dist2, std::size_t k, double sigma2);

/// Chebyshev tail bound min(1, variance / lambda^2) on
/// P[|estimate - dist2| > lambda].
double chebyshev_error_bound(double variance, double lambda);

/// Symmetric n x n grid with entry (i, j) = recover_distance(Z_i, Z_j);
/// the diagonal is -2 k sigma2. OpenMP-parallel over rows, bit-identical to
/// the serial form.
Matrix pairwise_distances(const ReleasedMatrix& z);
Matrix pairwise_distances_serial(const ReleasedMatrix& z);

}  // namespace jldp

#endif  // JLDP_RECOVERY_HPP_
