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

#include "jldp/projection.hpp"

#include <atomic>
#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "jldp/kernels.hpp"

namespace jldp {

ProjectionMatrix sample_projection(std::size_t d, std::size_t k, RngSeed rng) {
  if (d == 0 || k == 0) {
    throw std::invalid_argument("sample_projection: d and k must be >= 1");
  }
  if (k >= d) {
    // Once per process; Monte-Carlo sweeps would otherwise flood stderr.
    static std::atomic<bool> warned{false};
    if (!warned.exchange(true)) {
      std::fprintf(stderr,
                   "warning: projection dimension k=%zu >= input dimension "
                   "d=%zu; this is not a reduction\n",
                   k, d);
    }
  }
  Matrix values(d, k);
  Rng gen(rng);
  const double scale = 1.0 / std::sqrt(static_cast<double>(k));
  for (std::size_t i = 0; i < d * k; ++i) {
    values.data()[i] = gen.next_gaussian() * scale;
  }
  return ProjectionMatrix{std::move(values)};
}

Matrix project(const DataMatrix& x, const ProjectionMatrix& p) {
  if (x.cols() != p.d()) {
    throw std::invalid_argument("project: x has " + std::to_string(x.cols()) +
                                " columns but the projection expects " +
                                std::to_string(p.d()));
  }
  Matrix y(x.rows(), p.k());
  kernels::matmul(x.values(), p.values, y);
  return y;
}

Matrix project_serial(const DataMatrix& x, const ProjectionMatrix& p) {
  if (x.cols() != p.d()) {
    throw std::invalid_argument("project: x has " + std::to_string(x.cols()) +
                                " columns but the projection expects " +
                                std::to_string(p.d()));
  }
  Matrix y(x.rows(), p.k());
  kernels::matmul_serial(x.values(), p.values, y);
  return y;
}

double max_row_norm2(const ProjectionMatrix& p) {
  double best = 0.0;
  for (std::size_t i = 0; i < p.d(); ++i) {
    double sq = 0.0;
    for (double v : p.values.row(i)) {
      sq += v * v;
    }
    const double norm = std::sqrt(sq);
    if (norm > best) {
      best = norm;
    }
  }
  return best;
}

double implied_distortion(std::size_t k, std::size_t n) {
  if (k == 0 || n < 2) {
    return 0.0;
  }
  return std::sqrt(std::log(static_cast<double>(n)) / static_cast<double>(k));
}

}  // namespace jldp
