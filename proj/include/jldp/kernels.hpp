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

#ifndef JLDP_KERNELS_HPP_
#define JLDP_KERNELS_HPP_

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "jldp/matrix.hpp"

// Data-parallel inner loops, each in an OpenMP form and a serial reference
// form. The parallel forms split work so that every thread writes a disjoint
// output range and any reduction happens serially afterwards, so both forms
// produce bit-identical results for any thread count. Tests assert that;
// the benchmark target compares their throughput.
namespace jldp::kernels {

/// out = a * b, row-major. Shapes must already agree (a.cols == b.rows,
/// out is a.rows x b.cols).
void matmul(const Matrix& a, const Matrix& b, Matrix& out);
void matmul_serial(const Matrix& a, const Matrix& b, Matrix& out);

double squared_distance(std::span<const double> a, std::span<const double> b);

/// Assigns every row of x to its nearest centroid (ties to the lowest
/// index) and returns the total inertia. assignments.size() == x.rows().
double assign_clusters(const Matrix& x, const Matrix& centroids,
                       std::vector<int>& assignments);
double assign_clusters_serial(const Matrix& x, const Matrix& centroids,
                              std::vector<int>& assignments);

/// Runs fn(t) for t in [0, trials) in parallel; fn must only write state
/// owned by trial t (typically slot t of a results buffer).
void parallel_trials(std::size_t trials, const std::function<void(std::size_t)>& fn);

}  // namespace jldp::kernels

#endif  // JLDP_KERNELS_HPP_
