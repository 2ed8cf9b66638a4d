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

#ifndef JLDP_CLUSTERING_HPP_
#define JLDP_CLUSTERING_HPP_

#include <cstddef>
#include <span>
#include <vector>

#include "jldp/matrix.hpp"
#include "jldp/rng.hpp"

namespace jldp {

struct ClusteringResult {
  Matrix centroids;              ///< k_clusters x dim
  std::vector<int> assignments;  ///< per-row centroid index
  double inertia = 0.0;          ///< sum of squared distances to assigned centroids
  std::size_t iterations = 0;
  /// Inertia at each assignment step of the winning run; non-increasing.
  std::vector<double> inertia_history;
};

struct KMeansOptions {
  std::size_t n_init = 10;
  std::size_t max_iter = 300;
  double tol = 1e-4;  ///< stop when no centroid moves more than this
};

/// Lloyd iterations with k-means++ seeding, best of n_init restarts by
/// inertia (ties broken by lowest restart index). Restarts run in parallel
/// on derived child streams; the result is identical for any thread count.
/// An emptied cluster is reseeded to the point farthest from its assigned
/// centroid.
ClusteringResult kmeans(const Matrix& x, std::size_t k_clusters, RngSeed rng,
                        const KMeansOptions& opts = {});

/// Fraction of rows on which assignments match labels under the better of
/// the two binary relabelings. In [0.5, 1] for balanced two-class data.
double clustering_accuracy(std::span<const int> assignments,
                           std::span<const int> labels);

}  // namespace jldp

#endif  // JLDP_CLUSTERING_HPP_
