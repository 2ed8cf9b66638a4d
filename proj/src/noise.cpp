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

#include "jldp/noise.hpp"

#include <cmath>
#include <stdexcept>

namespace jldp {

std::string to_string(PrivacyMode mode) {
  return mode == PrivacyMode::kElementWise ? "element" : "row";
}

PrivacyMode privacy_mode_from_string(const std::string& name) {
  if (name == "element") {
    return PrivacyMode::kElementWise;
  }
  if (name == "row") {
    return PrivacyMode::kRowWise;
  }
  throw std::invalid_argument("unknown privacy mode '" + name +
                              "' (expected 'element' or 'row')");
}

double sample_laplace(Rng& rng, double b) {
  if (b <= 0.0) {
    throw std::invalid_argument("sample_laplace: scale b must be positive");
  }
  // u in (-1/2, 1/2) strictly, so 1 - 2|u| stays positive and the log is
  // finite.
  const double u = rng.next_open01() - 0.5;
  const double sign = u < 0.0 ? -1.0 : 1.0;
  return -b * sign * std::log(1.0 - 2.0 * std::fabs(u));
}

NoiseMatrix sample_laplace_matrix(std::size_t n, std::size_t k, double b, RngSeed rng) {
  if (b <= 0.0) {
    throw std::invalid_argument("sample_laplace_matrix: scale b must be positive");
  }
  Matrix values(n, k);
  Rng gen(rng);
  for (std::size_t i = 0; i < n * k; ++i) {
    values.data()[i] = sample_laplace(gen, b);
  }
  return NoiseMatrix{std::move(values), b};
}

PrivacyParams calibrate_element_wise(std::size_t k, double epsilon, std::size_t d) {
  if (k < 1) {
    throw std::invalid_argument("calibrate_element_wise: k must be >= 1");
  }
  if (epsilon <= 0.0) {
    throw std::invalid_argument("calibrate_element_wise: epsilon must be positive");
  }
  if (d < 1) {
    throw std::invalid_argument("calibrate_element_wise: d must be >= 1");
  }
  PrivacyParams p;
  p.mode = PrivacyMode::kElementWise;
  p.epsilon = epsilon;
  p.k = k;
  p.c = 2.0 * std::sqrt(static_cast<double>(k));
  p.b = p.c / epsilon;
  p.sigma2 = 2.0 * p.b * p.b;
  const double unclamped =
      static_cast<double>(d) * std::exp(-static_cast<double>(k) / 2.0);
  p.vacuous_bound = unclamped >= 1.0;
  p.failure_bound = p.vacuous_bound ? 1.0 : unclamped;
  return p;
}

PrivacyParams calibrate_row_wise(std::size_t k, double epsilon, double alpha,
                                 double t_multiplier) {
  if (k < 1) {
    throw std::invalid_argument("calibrate_row_wise: k must be >= 1");
  }
  if (epsilon <= 0.0) {
    throw std::invalid_argument("calibrate_row_wise: epsilon must be positive");
  }
  if (alpha <= 0.0) {
    throw std::invalid_argument("calibrate_row_wise: alpha must be positive");
  }
  if (t_multiplier < 1.0) {
    throw std::invalid_argument(
        "calibrate_row_wise: t_multiplier must be >= 1 (t below its lower "
        "bound voids the guarantee)");
  }
  PrivacyParams p;
  p.mode = PrivacyMode::kRowWise;
  p.epsilon = epsilon;
  p.k = k;
  p.alpha = alpha;
  p.t_multiplier = t_multiplier;
  const double kk = static_cast<double>(k);
  const double log2k = std::log(2.0 * kk);
  p.t = t_multiplier * std::sqrt(2.0 * log2k * alpha / kk);
  p.c = kk * p.t;
  p.b = p.c / epsilon;
  p.sigma2 = 2.0 * p.b * p.b;
  // 2k exp(-k t^2 / (2 alpha)) with t substituted simplifies to
  // (2k)^(1 - m^2); the pow form is exact (== 1) at the m = 1 boundary.
  const double unclamped =
      std::pow(2.0 * kk, 1.0 - t_multiplier * t_multiplier);
  p.vacuous_bound = unclamped >= 1.0;
  p.failure_bound = p.vacuous_bound ? 1.0 : unclamped;
  return p;
}

}  // namespace jldp
