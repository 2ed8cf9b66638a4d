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

#include "jldp/clustering.hpp"

#include <cmath>
#include <cstdint>
#include <stdexcept>

#include "jldp/kernels.hpp"

namespace jldp {
namespace {

std::size_t weighted_pick(const std::vector<double>& weights, double total, Rng& gen) {
  if (total <= 0.0) {
    // All candidate weights are zero (duplicate points); fall back to uniform.
    return static_cast<std::size_t>(gen.next_u64() % weights.size());
  }
  const double r = gen.next_open01() * total;
  double cum = 0.0;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    cum += weights[i];
    if (r < cum) {
      return i;
    }
  }
  return weights.size() - 1;
}

// k-means++: first centroid uniform, then each next centroid drawn with
// probability proportional to the squared distance to the nearest chosen one.
Matrix kmeanspp_init(const Matrix& x, std::size_t k_clusters, Rng& gen) {
  const std::size_t n = x.rows();
  const std::size_t dim = x.cols();
  Matrix centroids(k_clusters, dim);

  std::size_t first = static_cast<std::size_t>(gen.next_u64() % n);
  for (std::size_t j = 0; j < dim; ++j) {
    centroids.data()[j] = x.data()[first * dim + j];
  }

  std::vector<double> weights(n);
  for (std::size_t c = 1; c < k_clusters; ++c) {
    double total = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      double best = kernels::squared_distance(
          x.row(i), std::span<const double>(centroids.data(), dim));
      for (std::size_t cc = 1; cc < c; ++cc) {
        const double d = kernels::squared_distance(
            x.row(i), std::span<const double>(centroids.data() + cc * dim, dim));
        if (d < best) {
          best = d;
        }
      }
      weights[i] = best;
      total += best;
    }
    const std::size_t pick = weighted_pick(weights, total, gen);
    for (std::size_t j = 0; j < dim; ++j) {
      centroids.data()[c * dim + j] = x.data()[pick * dim + j];
    }
  }
  return centroids;
}

// Recompute centroids as cluster means. An emptied cluster is reseeded to
// the point currently farthest from its assigned centroid (ties to the
// lowest row index); each reseeded point is consumed so two empty clusters
// never grab the same row.
void update_centroids(const Matrix& x, const std::vector<int>& assignments,
                      Matrix& centroids) {
  const std::size_t n = x.rows();
  const std::size_t dim = x.cols();
  const std::size_t k = centroids.rows();

  std::vector<double> sums(k * dim, 0.0);
  std::vector<std::size_t> counts(k, 0);
  for (std::size_t i = 0; i < n; ++i) {
    const auto c = static_cast<std::size_t>(assignments[i]);
    ++counts[c];
    const double* row = x.data() + i * dim;
    double* sum = sums.data() + c * dim;
    for (std::size_t j = 0; j < dim; ++j) {
      sum[j] += row[j];
    }
  }

  std::vector<double> dist_to_own;
  for (std::size_t c = 0; c < k; ++c) {
    if (counts[c] > 0) {
      for (std::size_t j = 0; j < dim; ++j) {
        centroids.data()[c * dim + j] = sums[c * dim + j] / static_cast<double>(counts[c]);
      }
      continue;
    }
    if (dist_to_own.empty()) {
      dist_to_own.resize(n);
      for (std::size_t i = 0; i < n; ++i) {
        dist_to_own[i] = kernels::squared_distance(
            x.row(i), centroids.row(static_cast<std::size_t>(assignments[i])));
      }
    }
    std::size_t farthest = 0;
    for (std::size_t i = 1; i < n; ++i) {
      if (dist_to_own[i] > dist_to_own[farthest]) {
        farthest = i;
      }
    }
    for (std::size_t j = 0; j < dim; ++j) {
      centroids.data()[c * dim + j] = x.data()[farthest * dim + j];
    }
    dist_to_own[farthest] = -1.0;
  }
}

ClusteringResult run_single_init(const Matrix& x, std::size_t k_clusters,
                                 RngSeed stream, const KMeansOptions& opts) {
  const std::size_t dim = x.cols();
  Rng gen(stream);
  Matrix centroids = kmeanspp_init(x, k_clusters, gen);

  ClusteringResult result;
  result.assignments.assign(x.rows(), 0);

  Matrix previous(k_clusters, dim);
  for (std::size_t iter = 0; iter < opts.max_iter; ++iter) {
    result.inertia = kernels::assign_clusters_serial(x, centroids, result.assignments);
    result.inertia_history.push_back(result.inertia);
    result.iterations = iter + 1;

    previous = centroids;
    update_centroids(x, result.assignments, centroids);

    double movement = 0.0;
    for (std::size_t c = 0; c < k_clusters; ++c) {
      const double moved = std::sqrt(
          kernels::squared_distance(centroids.row(c), previous.row(c)));
      if (moved > movement) {
        movement = moved;
      }
    }
    if (movement <= opts.tol) {
      break;
    }
  }
  // Final pass so assignments and inertia reflect the final centroids.
  result.inertia = kernels::assign_clusters_serial(x, centroids, result.assignments);
  result.inertia_history.push_back(result.inertia);
  result.centroids = std::move(centroids);
  return result;
}

}  // namespace

ClusteringResult kmeans(const Matrix& x, std::size_t k_clusters, RngSeed rng,
                        const KMeansOptions& opts) {
  if (x.rows() == 0 || x.cols() == 0) {
    throw std::invalid_argument("kmeans: input is empty");
  }
  if (k_clusters < 1 || k_clusters > x.rows()) {
    throw std::invalid_argument("kmeans: need 1 <= k_clusters <= number of rows");
  }
  if (opts.n_init < 1 || opts.max_iter < 1) {
    throw std::invalid_argument("kmeans: n_init and max_iter must be >= 1");
  }
  if (opts.tol < 0.0) {
    throw std::invalid_argument("kmeans: tol must be >= 0");
  }

  std::vector<ClusteringResult> runs(opts.n_init);
  const std::int64_t n_init = static_cast<std::int64_t>(opts.n_init);
#pragma omp parallel for schedule(dynamic, 1)
  for (std::int64_t i = 0; i < n_init; ++i) {
    runs[i] = run_single_init(x, k_clusters, derive_stream(rng, i), opts);
  }

  // Lowest inertia wins; ties break to the lowest restart index.
  std::size_t best = 0;
  for (std::size_t i = 1; i < runs.size(); ++i) {
    if (runs[i].inertia < runs[best].inertia) {
      best = i;
    }
  }
  return std::move(runs[best]);
}

double clustering_accuracy(std::span<const int> assignments,
                           std::span<const int> labels) {
  if (assignments.size() != labels.size()) {
    throw std::invalid_argument("clustering_accuracy: length mismatch");
  }
  if (assignments.empty()) {
    throw std::invalid_argument("clustering_accuracy: empty input");
  }
  std::size_t matches = 0;
  for (std::size_t i = 0; i < assignments.size(); ++i) {
    if (assignments[i] < 0 || assignments[i] > 1 || labels[i] < 0 || labels[i] > 1) {
      throw std::invalid_argument("clustering_accuracy: indices must be 0 or 1");
    }
    if (assignments[i] == labels[i]) {
      ++matches;
    }
  }
  const std::size_t flipped = assignments.size() - matches;
  const std::size_t best = matches > flipped ? matches : flipped;
  return static_cast<double>(best) / static_cast<double>(assignments.size());
}

}  // namespace jldp
