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

#include <cmath>
#include <stdexcept>
#include <string>

namespace jldp {

Matrix::Matrix(std::size_t rows, std::size_t cols, double fill)
    : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

Matrix::Matrix(std::size_t rows, std::size_t cols, std::vector<double> values)
    : rows_(rows), cols_(cols), data_(std::move(values)) {
  if (data_.size() != rows_ * cols_) {
    throw std::invalid_argument("Matrix: got " + std::to_string(data_.size()) +
                                " values for shape " + std::to_string(rows_) +
                                "x" + std::to_string(cols_));
  }
}

double Matrix::at(std::size_t i, std::size_t j) const {
  if (i >= rows_ || j >= cols_) {
    throw std::out_of_range("Matrix::at(" + std::to_string(i) + ", " +
                            std::to_string(j) + ") out of bounds for " +
                            std::to_string(rows_) + "x" + std::to_string(cols_));
  }
  return data_[i * cols_ + j];
}

double& Matrix::at(std::size_t i, std::size_t j) {
  if (i >= rows_ || j >= cols_) {
    throw std::out_of_range("Matrix::at(" + std::to_string(i) + ", " +
                            std::to_string(j) + ") out of bounds for " +
                            std::to_string(rows_) + "x" + std::to_string(cols_));
  }
  return data_[i * cols_ + j];
}

std::span<const double> Matrix::row(std::size_t i) const {
  if (i >= rows_) {
    throw std::out_of_range("Matrix::row(" + std::to_string(i) +
                            ") out of bounds for " + std::to_string(rows_) +
                            " rows");
  }
  return {data_.data() + i * cols_, cols_};
}

std::span<double> Matrix::row(std::size_t i) {
  if (i >= rows_) {
    throw std::out_of_range("Matrix::row(" + std::to_string(i) +
                            ") out of bounds for " + std::to_string(rows_) +
                            " rows");
  }
  return {data_.data() + i * cols_, cols_};
}

bool Matrix::all_finite() const {
  for (double v : data_) {
    if (!std::isfinite(v)) {
      return false;
    }
  }
  return true;
}

DataMatrix::DataMatrix(std::size_t n, std::size_t d, std::vector<double> values)
    : DataMatrix(Matrix(n, d, std::move(values))) {}

DataMatrix::DataMatrix(Matrix m) : m_(std::move(m)) {
  if (m_.rows() == 0 || m_.cols() == 0) {
    throw std::invalid_argument("DataMatrix: needs at least one row and one column");
  }
  if (!m_.all_finite()) {
    throw std::invalid_argument("DataMatrix: values must be finite (no NaN/Inf)");
  }
}

}  // namespace jldp
