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

#ifndef JLDP_DATAGEN_HPP_
#define JLDP_DATAGEN_HPP_

#include <cstddef>
#include <vector>

#include "jldp/matrix.hpp"
#include "jldp/rng.hpp"

namespace jldp {

struct LabeledDataset {
  DataMatrix data;
  std::vector<int> labels;  ///< per-row cluster index, in {0, 1}
};

/// Two isotropic Gaussian clusters of n_per_cluster points each in R^d.
/// The centers sit at -(center_distance/2) e1 and +(center_distance/2) e1,
/// so their Euclidean distance is exactly center_distance; every point is
/// its center plus N(0, cluster_std^2) per coordinate. Rows are shuffled
/// deterministically by rng.
LabeledDataset make_blobs(std::size_t n_per_cluster, std::size_t d,
                          double center_distance, double cluster_std,
                          RngSeed rng);

}  // namespace jldp

#endif  // JLDP_DATAGEN_HPP_
