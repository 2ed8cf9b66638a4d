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

#include "jldp/datagen.hpp"

#include <stdexcept>
#include <utility>

namespace jldp {

LabeledDataset make_blobs(std::size_t n_per_cluster, std::size_t d,
                          double center_distance, double cluster_std,
                          RngSeed rng) {
  if (n_per_cluster < 1 || d < 1) {
    throw std::invalid_argument("make_blobs: n_per_cluster and d must be >= 1");
  }
  if (center_distance < 0.0) {
    throw std::invalid_argument("make_blobs: center_distance must be >= 0");
  }
  if (cluster_std <= 0.0) {
    throw std::invalid_argument("make_blobs: cluster_std must be positive");
  }

  const std::size_t n = 2 * n_per_cluster;
  Matrix values(n, d);
  std::vector<int> labels(n);

  // Halving is exact in IEEE, so the center distance is met to the bit.
  const double half = center_distance / 2.0;
  Rng gen(derive_stream(rng, 0));
  for (std::size_t i = 0; i < n; ++i) {
    const int label = i < n_per_cluster ? 0 : 1;
    labels[i] = label;
    double* row = values.data() + i * d;
    for (std::size_t j = 0; j < d; ++j) {
      row[j] = gen.next_gaussian() * cluster_std;
    }
    row[0] += label == 0 ? -half : half;
  }

  // Fisher-Yates on rows and labels together.
  Rng shuffle(derive_stream(rng, 1));
  for (std::size_t i = n - 1; i > 0; --i) {
    const std::size_t j = shuffle.next_u64() % (i + 1);
    if (j != i) {
      std::swap(labels[i], labels[j]);
      for (std::size_t col = 0; col < d; ++col) {
        std::swap(values.data()[i * d + col], values.data()[j * d + col]);
      }
    }
  }

  return LabeledDataset{DataMatrix(std::move(values)), std::move(labels)};
}

}  // namespace jldp
