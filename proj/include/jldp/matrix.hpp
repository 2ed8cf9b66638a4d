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

#ifndef JLDP_MATRIX_HPP_
#define JLDP_MATRIX_HPP_

#include <cstddef>
#include <span>
#include <vector>

namespace jldp {

/// Dense row-major matrix of doubles. All element and row access is
/// bounds-checked (std::out_of_range).
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, double fill = 0.0);
  /// values.size() must equal rows * cols; row-major order.
  Matrix(std::size_t rows, std::size_t cols, std::vector<double> values);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t size() const { return data_.size(); }

  double at(std::size_t i, std::size_t j) const;
  double& at(std::size_t i, std::size_t j);

  std::span<const double> row(std::size_t i) const;
  std::span<double> row(std::size_t i);

  const double* data() const { return data_.data(); }
  double* data() { return data_.data(); }

  bool all_finite() const;

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> data_;
};

/// A database of n >= 1 records with d >= 1 attributes; row i is record i.
/// Construction rejects NaN/Inf values and empty shapes. Immutable after
/// construction and safe to share across threads.
class DataMatrix {
 public:
  DataMatrix(std::size_t n, std::size_t d, std::vector<double> values);
  explicit DataMatrix(Matrix m);

  std::size_t rows() const { return m_.rows(); }
  std::size_t cols() const { return m_.cols(); }
  double at(std::size_t i, std::size_t j) const { return m_.at(i, j); }
  std::span<const double> row(std::size_t i) const { return m_.row(i); }
  const Matrix& values() const { return m_; }

  friend bool operator==(const DataMatrix&, const DataMatrix&) = default;

 private:
  Matrix m_;
};

}  // namespace jldp

#endif  // JLDP_MATRIX_HPP_
