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

#include "jldp/matrix.hpp"

#include <limits>
#include <stdexcept>
#include <vector>

#include <doctest.h>

#include "jldp/rng.hpp"

using namespace jldp;

TEST_SUITE("matrix") {

TEST_CASE("shape and value construction") {
  Matrix m(2, 3, 1.5);
  CHECK(m.rows() == 2);
  CHECK(m.cols() == 3);
  CHECK(m.at(1, 2) == 1.5);
  CHECK_THROWS_AS(Matrix(2, 3, std::vector<double>{1.0}), std::invalid_argument);
}

TEST_CASE("element and row access is bounds-checked") {
  Matrix m(2, 3);
  CHECK_THROWS_AS(m.at(2, 0), std::out_of_range);
  CHECK_THROWS_AS(m.at(0, 3), std::out_of_range);
  CHECK_THROWS_AS(m.row(2), std::out_of_range);
  const Matrix& cm = m;
  CHECK_THROWS_AS(cm.at(2, 0), std::out_of_range);
  CHECK(cm.row(1).size() == 3);
}

TEST_CASE("DataMatrix rejects empty shapes") {
  CHECK_THROWS_AS(DataMatrix(0, 3, {}), std::invalid_argument);
  CHECK_THROWS_AS(DataMatrix(3, 0, {}), std::invalid_argument);
}

TEST_CASE("DataMatrix rejects injected non-finite values") {
  // Property: a random finite matrix passes; the same matrix with one NaN
  // or Inf planted at a random position is rejected.
  Rng gen(RngSeed{31337, 0});
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = 1 + gen.next_u64() % 6;
    const std::size_t d = 1 + gen.next_u64() % 6;
    std::vector<double> values(n * d);
    for (double& v : values) {
      v = gen.next_gaussian();
    }
    CHECK_NOTHROW(DataMatrix(n, d, values));

    const std::size_t pos = gen.next_u64() % values.size();
    std::vector<double> bad = values;
    bad[pos] = trial % 2 == 0 ? std::numeric_limits<double>::quiet_NaN()
                              : std::numeric_limits<double>::infinity();
    CHECK_THROWS_AS(DataMatrix(n, d, bad), std::invalid_argument);
  }
}

TEST_CASE("equality is value-based") {
  Matrix a(2, 2, {1, 2, 3, 4});
  Matrix b(2, 2, {1, 2, 3, 4});
  Matrix c(2, 2, {1, 2, 3, 5});
  CHECK(a == b);
  CHECK(a != c);
}

}  // TEST_SUITE
