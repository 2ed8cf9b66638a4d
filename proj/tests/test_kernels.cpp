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

#include <atomic>
#include <stdexcept>
#include <vector>

#include <doctest.h>

#include "jldp/rng.hpp"
#include "test_oracles.hpp"

using namespace jldp;

namespace {

Matrix random_matrix(std::size_t rows, std::size_t cols, RngSeed seed) {
  Matrix m(rows, cols);
  Rng gen(seed);
  for (std::size_t i = 0; i < rows * cols; ++i) {
    m.data()[i] = gen.next_gaussian();
  }
  return m;
}

}  // namespace

TEST_SUITE("kernels") {

TEST_CASE("matmul matches the naive triple-loop oracle exactly") {
  const Matrix a = random_matrix(7, 5, RngSeed{1, 0});
  const Matrix b = random_matrix(5, 3, RngSeed{2, 0});
  Matrix out(7, 3);
  kernels::matmul_serial(a, b, out);
  const Matrix expected = test_oracles::naive_matmul(a, b);
  // The kernel reorders loops but keeps one accumulation order per output
  // element, so results agree to the bit.
  CHECK(out == expected);
}

TEST_CASE("parallel matmul is bit-identical to the serial reference") {
  const Matrix a = random_matrix(64, 32, RngSeed{3, 0});
  const Matrix b = random_matrix(32, 16, RngSeed{4, 0});
  Matrix omp_out(64, 16);
  Matrix serial_out(64, 16);
  kernels::matmul(a, b, omp_out);
  kernels::matmul_serial(a, b, serial_out);
  CHECK(omp_out == serial_out);
}

TEST_CASE("matmul rejects shape mismatches") {
  const Matrix a(2, 3);
  const Matrix b(4, 2);
  Matrix out(2, 2);
  CHECK_THROWS_AS(kernels::matmul_serial(a, b, out), std::invalid_argument);
}

TEST_CASE("squared_distance") {
  const std::vector<double> a{1.0, 2.0};
  const std::vector<double> b{4.0, 6.0};
  CHECK(kernels::squared_distance(a, b) == 25.0);
  const std::vector<double> c{1.0};
  CHECK_THROWS_AS(kernels::squared_distance(a, c), std::invalid_argument);
}

TEST_CASE("parallel cluster assignment matches the serial reference") {
  const Matrix x = random_matrix(200, 6, RngSeed{5, 0});
  const Matrix centroids = random_matrix(4, 6, RngSeed{6, 0});
  std::vector<int> a1(200);
  std::vector<int> a2(200);
  const double i1 = kernels::assign_clusters(x, centroids, a1);
  const double i2 = kernels::assign_clusters_serial(x, centroids, a2);
  CHECK(a1 == a2);
  CHECK(i1 == i2);
}

TEST_CASE("parallel_trials visits every slot exactly once") {
  const std::size_t n = 1000;
  std::vector<int> hits(n, 0);
  std::atomic<int> calls{0};
  kernels::parallel_trials(n, [&](std::size_t t) {
    ++hits[t];
    calls.fetch_add(1);
  });
  CHECK(calls.load() == static_cast<int>(n));
  for (int h : hits) {
    CHECK(h == 1);
  }
}

}  // TEST_SUITE
