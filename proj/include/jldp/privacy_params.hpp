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

#ifndef JLDP_PRIVACY_PARAMS_HPP_
#define JLDP_PRIVACY_PARAMS_HPP_

#include <cstddef>
#include <string>

namespace jldp {

/// Which notion of neighboring databases the release is calibrated for:
/// databases differing in a single element, or in a single row.
enum class PrivacyMode { kElementWise, kRowWise };

std::string to_string(PrivacyMode mode);
PrivacyMode privacy_mode_from_string(const std::string& name);

/// Calibrated parameters for one private release. Produced by
/// calibrate_element_wise / calibrate_row_wise (noise.hpp); treat as
/// immutable once calibrated.
struct PrivacyParams {
  PrivacyMode mode = PrivacyMode::kElementWise;
  double epsilon = 0.0;      ///< privacy budget
  std::size_t k = 0;         ///< projection dimension
  double alpha = 0.0;        ///< row-difference bound (row-wise only)
  double t = 0.0;            ///< tail parameter (row-wise only)
  double t_multiplier = 0.0; ///< t / t_min (row-wise only)
  double c = 0.0;            ///< sensitivity constant
  double b = 0.0;            ///< Laplace scale, c / epsilon
  double sigma2 = 0.0;       ///< per-entry noise variance, 2 b^2
  double failure_bound = 0.0; ///< P[the epsilon-guarantee fails], clamped to [0, 1]
  bool vacuous_bound = false; ///< true when the unclamped bound was >= 1

  bool calibrated() const {
    return k >= 1 && epsilon > 0.0 && b > 0.0 && sigma2 > 0.0;
  }

  friend bool operator==(const PrivacyParams&, const PrivacyParams&) = default;
};

}  // namespace jldp

#endif  // JLDP_PRIVACY_PARAMS_HPP_
