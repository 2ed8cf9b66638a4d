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

// Serial reference vs OpenMP kernels, plus the end-to-end mechanism.
// Build target jldp_bench; not part of ctest.

#include <benchmark/benchmark.h>

#include <vector>

#include "jldp/clustering.hpp"
#include "jldp/kernels.hpp"
#include "jldp/matrix.hpp"
#include "jldp/mechanism.hpp"
#include "jldp/noise.hpp"
#include "jldp/recovery.hpp"
#include "jldp/rng.hpp"

namespace {

using namespace jldp;

Matrix random_matrix(std::size_t rows, std::size_t cols, RngSeed seed) {
  Matrix m(rows, cols);
  Rng gen(seed);
  for (std::size_t i = 0; i < rows * cols; ++i) {
    m.data()[i] = gen.next_gaussian();
  }
  return m;
}

void BM_MatmulSerial(benchmark::State& state) {
  const Matrix a = random_matrix(2000, 100, RngSeed{1, 0});
  const Matrix b = random_matrix(100, 20, RngSeed{2, 0});
  Matrix out(2000, 20);
  for (auto _ : state) {
    kernels::matmul_serial(a, b, out);
    benchmark::DoNotOptimize(out.data());
  }
}
BENCHMARK(BM_MatmulSerial);

void BM_MatmulParallel(benchmark::State& state) {
  const Matrix a = random_matrix(2000, 100, RngSeed{1, 0});
  const Matrix b = random_matrix(100, 20, RngSeed{2, 0});
  Matrix out(2000, 20);
  for (auto _ : state) {
    kernels::matmul(a, b, out);
    benchmark::DoNotOptimize(out.data());
  }
}
BENCHMARK(BM_MatmulParallel);

ReleasedMatrix bench_release(std::size_t n, std::size_t k) {
  Matrix z = random_matrix(n, k, RngSeed{3, 0});
  return ReleasedMatrix{std::move(z), calibrate_element_wise(k, 4.0, k + 1)};
}

void BM_PairwiseSerial(benchmark::State& state) {
  const ReleasedMatrix z = bench_release(500, 20);
  for (auto _ : state) {
    Matrix grid = pairwise_distances_serial(z);
    benchmark::DoNotOptimize(grid.data());
  }
}
BENCHMARK(BM_PairwiseSerial);

void BM_PairwiseParallel(benchmark::State& state) {
  const ReleasedMatrix z = bench_release(500, 20);
  for (auto _ : state) {
    Matrix grid = pairwise_distances(z);
    benchmark::DoNotOptimize(grid.data());
  }
}
BENCHMARK(BM_PairwiseParallel);

void BM_AssignSerial(benchmark::State& state) {
  const Matrix x = random_matrix(2000, 20, RngSeed{4, 0});
  const Matrix centroids = random_matrix(2, 20, RngSeed{5, 0});
  std::vector<int> assignments(2000);
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        kernels::assign_clusters_serial(x, centroids, assignments));
  }
}
BENCHMARK(BM_AssignSerial);

void BM_AssignParallel(benchmark::State& state) {
  const Matrix x = random_matrix(2000, 20, RngSeed{4, 0});
  const Matrix centroids = random_matrix(2, 20, RngSeed{5, 0});
  std::vector<int> assignments(2000);
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        kernels::assign_clusters(x, centroids, assignments));
  }
}
BENCHMARK(BM_AssignParallel);

void BM_MechanismRelease(benchmark::State& state) {
  const Matrix raw = random_matrix(2000, 100, RngSeed{6, 0});
  const DataMatrix x(raw);
  const PrivacyParams params = calibrate_element_wise(20, 4.0, 100);
  std::uint64_t t = 0;
  for (auto _ : state) {
    const ReleasedMatrix z = release(x, params, RngSeed{7, t++});
    benchmark::DoNotOptimize(z.z.data());
  }
}
BENCHMARK(BM_MechanismRelease);

}  // namespace

BENCHMARK_MAIN();
