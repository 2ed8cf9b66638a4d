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

#include "jldp/recovery.hpp"

#include <cstdint>
#include <stdexcept>

#include "jldp/kernels.hpp"

namespace jldp {
namespace {

void fill_distance_row(const ReleasedMatrix& z, std::size_t i, Matrix& out) {
  const std::size_t k = z.k();
  const double sigma2 = z.params.sigma2;
  for (std::size_t j = 0; j < z.n(); ++j) {
    const RecoveredDistance d =
        recover_distance(z.z.row(i), z.z.row(j), k, sigma2);
    out.data()[i * z.n() + j] = d.estimate;
  }
}

}  // namespace

RecoveredDistance recover_distance(std::span<const double> zi,
                                   std::span<const double> zj,
                                   std::size_t k, double sigma2) {
  if (zi.size() != k || zj.size() != k) {
    throw std::invalid_argument("recover_distance: rows must have length k");
  }
  if (sigma2 < 0.0) {
    throw std::invalid_argument("recover_distance: sigma2 must be >= 0");
  }
  const double sq = kernels::squared_distance(zi, zj);
  return RecoveredDistance{sq - 2.0 * static_cast<double>(k) * sigma2, k, sigma2};
}

VarianceReport analytic_variance(double dist2, std::size_t k, double sigma2) {
  if (dist2 < 0.0) {
    throw std::invalid_argument("analytic_variance: dist2 must be >= 0");
  }
  if (k < 1) {
    throw std::invalid_argument("analytic_variance: k must be >= 1");
  }
  if (sigma2 < 0.0) {
    throw std::invalid_argument("analytic_variance: sigma2 must be >= 0");
  }
  const double kk = static_cast<double>(k);
  VarianceReport r;
  r.var_projection = 2.0 / kk * dist2 * dist2;
  r.var_noise = 14.0 * kk * sigma2 * sigma2;
  r.var_cross = 8.0 * sigma2 * dist2;
  r.total = r.var_projection + r.var_noise + r.var_cross;
  r.uncorrected_total = r.var_projection +
                        2.0 * kk * (7.0 * sigma2 * sigma2 - sigma2) +
                        4.0 * sigma2 * dist2;
  return r;
}

double chebyshev_error_bound(double variance, double lambda) {
  if (variance < 0.0) {
    throw std::invalid_argument("chebyshev_error_bound: variance must be >= 0");
  }
  if (lambda <= 0.0) {
    throw std::invalid_argument("chebyshev_error_bound: lambda must be positive");
  }
  const double bound = variance / (lambda * lambda);
  return bound > 1.0 ? 1.0 : bound;
}

Matrix pairwise_distances(const ReleasedMatrix& z) {
  Matrix out(z.n(), z.n());
  const std::int64_t n = static_cast<std::int64_t>(z.n());
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < n; ++i) {
    fill_distance_row(z, static_cast<std::size_t>(i), out);
  }
  return out;
}

Matrix pairwise_distances_serial(const ReleasedMatrix& z) {
  Matrix out(z.n(), z.n());
  for (std::size_t i = 0; i < z.n(); ++i) {
    fill_distance_row(z, i, out);
  }
  return out;
}

}  // namespace jldp
