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

#ifndef JLDP_EXPERIMENTS_HPP_
#define JLDP_EXPERIMENTS_HPP_

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "jldp/privacy_params.hpp"

// The experiment harness behind the CLI. Every run_* writes its data files
// plus a manifest whose `command` field reproduces all outputs
// byte-identically when re-executed (timestamps are inputs here, not wall
// clock reads, for exactly that reason).
namespace jldp::experiments {

std::string now_utc_iso8601();

/// `base` with its extension replaced by `suffix`, e.g.
/// with_suffix("out/data.csv", ".manifest.json") -> "out/data.manifest.json".
std::filesystem::path with_suffix(const std::filesystem::path& base,
                                  const std::string& suffix);

// ---------------------------------------------------------------------------
// generate: synthetic two-cluster dataset
// ---------------------------------------------------------------------------

struct GenerateConfig {
  std::size_t n_per_cluster = 1000;
  std::size_t d = 3;
  double center_distance = 4.0;
  double cluster_std = 1.0;
  std::uint64_t seed = 0;
  std::string timestamp;  ///< resolved ISO-8601; empty means "now"
  std::filesystem::path out;  ///< dataset CSV path
};

void run_generate(GenerateConfig cfg);

// ---------------------------------------------------------------------------
// release: private release of a dataset CSV
// ---------------------------------------------------------------------------

struct ReleaseConfig {
  std::filesystem::path in;
  PrivacyMode mode = PrivacyMode::kElementWise;
  double epsilon = 4.0;
  std::size_t k = 2;
  double alpha = 1.0;
  double t_multiplier = 1.0;
  std::uint64_t seed = 0;
  std::string timestamp;
  std::filesystem::path out;
};

void run_release(ReleaseConfig cfg);

// ---------------------------------------------------------------------------
// table1: k-means accuracy grid, non-private vs both private modes
// ---------------------------------------------------------------------------

struct GridCell {
  std::size_t d = 0;
  std::size_t k = 0;
};

struct Table1Config {
  std::vector<GridCell> grid = {{3, 2}, {10, 3}, {50, 10}, {100, 20}};
  double epsilon = 4.0;
  double alpha = 1.0;
  double t_multiplier = 1.0;
  std::size_t n_per_cluster = 1000;
  std::size_t seeds = 20;
  std::uint64_t seed = 0;
  std::string timestamp;
  std::filesystem::path out;  ///< base path; writes .csv, .report.json, .manifest.json
};

struct Table1Cell {
  std::size_t d = 0;
  std::size_t k = 0;
  std::string mode;  ///< none|element|row
  double mean_accuracy = 0.0;
  double std_accuracy = 0.0;
  double std_error = 0.0;
  std::size_t trials = 0;
};

struct Table1Report {
  std::vector<Table1Cell> cells;
};

Table1Report run_table1(Table1Config cfg);

// ---------------------------------------------------------------------------
// distance-recovery: error distribution of the distance estimator
// ---------------------------------------------------------------------------

struct DistanceRecoveryConfig {
  std::size_t n_pairs = 1000;
  std::size_t n_repeats = 1000;
  std::size_t d = 3;
  std::size_t k = 2;
  double epsilon = 4.0;
  PrivacyMode mode = PrivacyMode::kElementWise;
  double alpha = 1.0;
  double t_multiplier = 1.0;
  std::uint64_t seed = 0;
  std::string timestamp;
  std::filesystem::path out;  ///< base path; writes .csv, .hist.csv, .report.json, .manifest.json
};

struct DistanceRecoveryReport {
  double mean_difference = 0.0;
  double std_difference = 0.0;
  double std_error = 0.0;
  std::size_t n_differences = 0;
};

DistanceRecoveryReport run_distance_recovery(DistanceRecoveryConfig cfg);

// ---------------------------------------------------------------------------
// std-curve: released-data standard deviation sqrt(1 + 2 b^2) as k grows
// ---------------------------------------------------------------------------

struct StdCurveConfig {
  std::size_t k_min = 2;
  std::size_t k_max = 20;
  double epsilon = 4.0;
  double alpha = 1.0;
  double t_multiplier = 1.0;
  std::uint64_t seed = 0;
  std::string timestamp;
  std::filesystem::path out;  ///< base path; writes .csv, .report.json, .manifest.json
};

struct StdCurvePoint {
  std::size_t k = 0;
  std::string mode;  ///< element|row
  double b = 0.0;
  double std = 0.0;  ///< sqrt(1 + 2 b^2)
};

struct StdCurveReport {
  std::vector<StdCurvePoint> points;
};

StdCurveReport run_std_curve(StdCurveConfig cfg);

// ---------------------------------------------------------------------------
// verify: statistical property suites
// ---------------------------------------------------------------------------

/// Suites: "jl" (projection preserves squared distances in expectation),
/// "sensitivity" (single-element L1 sensitivity inequality),
/// "row-norm-tail" (max projection row norm tail bound),
/// "coordinate-tail" (per-coordinate sub-Gaussian tail bound),
/// "unbiased" (distance estimator is unbiased; cross term has zero mean),
/// "variance" (estimator variance decomposition, with the corrected vs
/// uncorrected closed form side by side),
/// "chebyshev" (empirical error exceedance vs the Chebyshev bound),
/// "all" (everything above).
struct VerifyConfig {
  std::string suite = "all";
  double trials_scale = 1.0;  ///< multiplies each suite's default trial count
  std::uint64_t seed = 0;
  std::string timestamp;
  std::filesystem::path out;  ///< base path; writes .report.json, .manifest.json
};

struct PropertyResult {
  std::string name;
  bool pass = false;
  double observed = 0.0;
  double bound = 0.0;  ///< observed must be <= bound
  std::size_t trials = 0;
  std::string detail;
};

struct VerifyReport {
  std::vector<PropertyResult> results;
  bool all_pass = false;
};

VerifyReport run_verify(VerifyConfig cfg);

std::vector<std::string> verify_suite_names();

}  // namespace jldp::experiments

#endif  // JLDP_EXPERIMENTS_HPP_
