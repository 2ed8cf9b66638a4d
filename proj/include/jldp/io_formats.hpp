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

#ifndef JLDP_IO_FORMATS_HPP_
#define JLDP_IO_FORMATS_HPP_

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "jldp/matrix.hpp"
#include "jldp/privacy_params.hpp"

namespace jldp {

inline constexpr const char* kManifestSchemaVersion = "1";

/// Shortest decimal form that parses back to the same double, bit-exact.
std::string format_double(double value);

struct CsvDataset {
  Matrix values;
  std::optional<std::vector<int>> labels;
};

/// Header `f0,...,f{d-1}[,label]`, '\n' newlines, floats in shortest
/// round-trip form. read_csv(write_csv(m)) reproduces m bit-exactly.
/// Writing rejects non-finite values; parse errors carry the line number.
void write_csv(const Matrix& m, const std::optional<std::vector<int>>& labels,
               const std::filesystem::path& path);
CsvDataset read_csv(const std::filesystem::path& path);

/// Full record of one CLI run: enough to reproduce every output file
/// byte-for-byte by re-running `command`.
struct RunManifest {
  std::string schema_version = kManifestSchemaVersion;
  std::string command;    ///< the reproducing invocation
  std::string timestamp;  ///< UTC ISO-8601
  std::uint64_t seed = 0;
  std::string mode;       ///< none|element|row|grid|curve|verify
  double epsilon = 0.0;
  std::uint64_t k = 0;
  std::uint64_t d = 0;
  std::uint64_t n = 0;
  double alpha = 0.0;
  double t = 0.0;
  double t_multiplier = 0.0;
  double c = 0.0;
  double b = 0.0;
  double sigma2 = 0.0;
  double failure_bound = 0.0;
  bool vacuous_bound = false;
  bool labels_passthrough = false;

  friend bool operator==(const RunManifest&, const RunManifest&) = default;
};

/// Deterministic JSON with a fixed field order: identical manifests produce
/// byte-identical files.
void write_manifest(const RunManifest& m, const std::filesystem::path& path);

/// Strict load: unknown or missing fields, a schema_version mismatch, or
/// stored derived fields (c, b, sigma2, failure_bound, t) that disagree with
/// recomputation from the primary fields beyond 1e-12 relative are errors.
RunManifest read_manifest(const std::filesystem::path& path);

}  // namespace jldp

#endif  // JLDP_IO_FORMATS_HPP_
