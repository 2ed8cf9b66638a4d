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

#include <cmath>
#include <stdexcept>
#include <vector>

#include <doctest.h>

#include "jldp/rng.hpp"
#include "test_oracles.hpp"

using namespace jldp;

TEST_SUITE("projection") {

TEST_CASE("rejects empty dimensions") {
  CHECK_THROWS_AS(sample_projection(0, 2, RngSeed{}), std::invalid_argument);
  CHECK_THROWS_AS(sample_projection(2, 0, RngSeed{}), std::invalid_argument);
}

TEST_CASE("same seed gives identical matrices") {
  const ProjectionMatrix a = sample_projection(20, 5, RngSeed{11, 3});
  const ProjectionMatrix b = sample_projection(20, 5, RngSeed{11, 3});
  CHECK(a.values == b.values);
}

TEST_CASE("entries have zero mean") {
  // d=100, k=50: the entry variance is 1/k, so the mean over d*k entries
  // has standard error 1/sqrt(d*k*k); stay within 3 of them.
  const std::size_t d = 100;
  const std::size_t k = 50;
  const ProjectionMatrix p = sample_projection(d, k, RngSeed{21, 0});
  double sum = 0.0;
  for (std::size_t i = 0; i < d * k; ++i) {
    sum += p.values.data()[i];
  }
  const double mean = sum / static_cast<double>(d * k);
  CHECK(std::fabs(mean) < 3.0 / std::sqrt(static_cast<double>(d * k * k)));
}

TEST_CASE("entry variance is 1/k") {
  // k=4 over 1e5 entries: sample variance within 5% of 0.25.
  const std::size_t d = 25000;
  const std::size_t k = 4;
  const ProjectionMatrix p = sample_projection(d, k, RngSeed{22, 0});
  std::vector<double> entries(p.values.data(), p.values.data() + d * k);
  CHECK(test_oracles::sample_variance(entries) ==
        doctest::Approx(0.25).epsilon(0.05));
}

TEST_CASE("projecting the zero matrix gives zero") {
  const DataMatrix x(4, 6, std::vector<double>(24, 0.0));
  const ProjectionMatrix p = sample_projection(6, 2, RngSeed{23, 0});
  const Matrix y = project(x, p);
  CHECK(y == Matrix(4, 2, 0.0));
}

TEST_CASE("a column-truncated identity projection selects the first k columns") {
  const std::size_t d = 5;
  const std::size_t k = 3;
  Matrix id(d, k, 0.0);
  for (std::size_t j = 0; j < k; ++j) {
    id.at(j, j) = 1.0;
  }
  const ProjectionMatrix p{id};

  Rng gen(RngSeed{24, 0});
  std::vector<double> values(4 * d);
  for (double& v : values) {
    v = gen.next_gaussian();
  }
  const DataMatrix x(4, d, values);
  const Matrix y = project(x, p);
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      CHECK(y.at(i, j) == x.at(i, j));
    }
  }
}

TEST_CASE("project matches the brute-force product oracle") {
  Rng gen(RngSeed{25, 0});
  std::vector<double> values(3 * 5);
  for (double& v : values) {
    v = gen.next_gaussian();
  }
  const DataMatrix x(3, 5, values);
  const ProjectionMatrix p = sample_projection(5, 2, RngSeed{26, 0});
  const Matrix y = project(x, p);
  CHECK(y == test_oracles::naive_matmul(x.values(), p.values));
}

TEST_CASE("parallel and serial projection agree bit-for-bit") {
  Rng gen(RngSeed{27, 0});
  std::vector<double> values(40 * 30);
  for (double& v : values) {
    v = gen.next_gaussian();
  }
  const DataMatrix x(40, 30, values);
  const ProjectionMatrix p = sample_projection(30, 8, RngSeed{28, 0});
  CHECK(project(x, p) == project_serial(x, p));
}

TEST_CASE("project rejects dimension mismatches") {
  const DataMatrix x(2, 3, std::vector<double>(6, 1.0));
  const ProjectionMatrix p = sample_projection(4, 2, RngSeed{29, 0});
  CHECK_THROWS_AS(project(x, p), std::invalid_argument);
}

TEST_CASE("max_row_norm2") {
  SUBCASE("all-zero matrix") {
    CHECK(max_row_norm2(ProjectionMatrix{Matrix(3, 4, 0.0)}) == 0.0);
  }
  SUBCASE("single row of ones") {
    const std::size_t k = 9;
    CHECK(max_row_norm2(ProjectionMatrix{Matrix(1, k, 1.0)}) ==
          doctest::Approx(3.0).epsilon(1e-15));
  }
  SUBCASE("random matrix matches the per-row oracle") {
    const ProjectionMatrix p = sample_projection(17, 5, RngSeed{30, 0});
    double expected = 0.0;
    for (double norm : test_oracles::row_norms(p.values)) {
      expected = std::max(expected, norm);
    }
    CHECK(max_row_norm2(p) == expected);
  }
}

TEST_CASE("implied distortion diagnostic") {
  CHECK(implied_distortion(10, 100) ==
        doctest::Approx(std::sqrt(std::log(100.0) / 10.0)).epsilon(1e-15));
  // Small k at experiment scale implies distortion above 1; still reported,
  // never an error.
  CHECK(implied_distortion(2, 2000) > 1.0);
}

}  // TEST_SUITE
