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

#include "jldp/kernels.hpp"

#include <cstdint>
#include <limits>
#include <stdexcept>

namespace jldp::kernels {
namespace {

// Shared row kernel: out_row += x_il * b_row for every l. The i-k-j loop
// order keeps b traversal row-major.
void matmul_row(const double* a_row, const double* b, double* out_row,
                std::size_t inner, std::size_t cols_out) {
  for (std::size_t j = 0; j < cols_out; ++j) {
    out_row[j] = 0.0;
  }
  for (std::size_t l = 0; l < inner; ++l) {
    const double a_il = a_row[l];
    const double* b_row = b + l * cols_out;
    for (std::size_t j = 0; j < cols_out; ++j) {
      out_row[j] += a_il * b_row[j];
    }
  }
}

void check_matmul_shapes(const Matrix& a, const Matrix& b, const Matrix& out) {
  if (a.cols() != b.rows() || out.rows() != a.rows() || out.cols() != b.cols()) {
    throw std::invalid_argument("matmul: shape mismatch");
  }
}

int nearest_centroid(const double* row, const Matrix& centroids,
                     std::size_t dim, double& best_dist) {
  best_dist = std::numeric_limits<double>::infinity();
  int best = 0;
  for (std::size_t c = 0; c < centroids.rows(); ++c) {
    const double* cen = centroids.data() + c * dim;
    double d = 0.0;
    for (std::size_t j = 0; j < dim; ++j) {
      const double diff = row[j] - cen[j];
      d += diff * diff;
    }
    if (d < best_dist) {
      best_dist = d;
      best = static_cast<int>(c);
    }
  }
  return best;
}

}  // namespace

void matmul(const Matrix& a, const Matrix& b, Matrix& out) {
  check_matmul_shapes(a, b, out);
  const std::int64_t n = static_cast<std::int64_t>(a.rows());
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < n; ++i) {
    matmul_row(a.data() + i * a.cols(), b.data(), out.data() + i * b.cols(),
               a.cols(), b.cols());
  }
}

void matmul_serial(const Matrix& a, const Matrix& b, Matrix& out) {
  check_matmul_shapes(a, b, out);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    matmul_row(a.data() + i * a.cols(), b.data(), out.data() + i * b.cols(),
               a.cols(), b.cols());
  }
}

double squared_distance(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size()) {
    throw std::invalid_argument("squared_distance: length mismatch");
  }
  double d = 0.0;
  for (std::size_t j = 0; j < a.size(); ++j) {
    const double diff = a[j] - b[j];
    d += diff * diff;
  }
  return d;
}

double assign_clusters(const Matrix& x, const Matrix& centroids,
                       std::vector<int>& assignments) {
  const std::size_t dim = x.cols();
  const std::int64_t n = static_cast<std::int64_t>(x.rows());
  std::vector<double> dists(x.rows());
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < n; ++i) {
    assignments[i] = nearest_centroid(x.data() + i * dim, centroids, dim, dists[i]);
  }
  // Serial sum in row order keeps the inertia bit-identical to the
  // serial reference.
  double inertia = 0.0;
  for (double d : dists) {
    inertia += d;
  }
  return inertia;
}

double assign_clusters_serial(const Matrix& x, const Matrix& centroids,
                              std::vector<int>& assignments) {
  const std::size_t dim = x.cols();
  double inertia = 0.0;
  for (std::size_t i = 0; i < x.rows(); ++i) {
    double d = 0.0;
    assignments[i] = nearest_centroid(x.data() + i * dim, centroids, dim, d);
    inertia += d;
  }
  return inertia;
}

void parallel_trials(std::size_t trials, const std::function<void(std::size_t)>& fn) {
  const std::int64_t n = static_cast<std::int64_t>(trials);
#pragma omp parallel for schedule(dynamic, 16)
  for (std::int64_t t = 0; t < n; ++t) {
    fn(static_cast<std::size_t>(t));
  }
}

}  // namespace jldp::kernels
