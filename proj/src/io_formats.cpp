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

#include "jldp/io_formats.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <system_error>

#include <json.hpp>

#include "jldp/noise.hpp"

namespace jldp {
namespace {

[[noreturn]] void parse_error(const std::filesystem::path& path,
                              std::size_t line, const std::string& what) {
  throw std::runtime_error(path.string() + ":" + std::to_string(line) + ": " + what);
}

double parse_double(std::string_view field, const std::filesystem::path& path,
                    std::size_t line) {
  double value = 0.0;
  const auto [ptr, ec] =
      std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc{} || ptr != field.data() + field.size()) {
    parse_error(path, line, "not a number: '" + std::string(field) + "'");
  }
  return value;
}

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = line.find(',', start);
    if (comma == std::string_view::npos) {
      fields.push_back(line.substr(start));
      return fields;
    }
    fields.push_back(line.substr(start, comma - start));
    start = comma + 1;
  }
}

bool relatively_close(double a, double b) {
  if (a == b) {
    return true;
  }
  const double scale = std::max(std::fabs(a), std::fabs(b));
  return std::fabs(a - b) <= 1e-12 * scale;
}

void check_derived(const std::string& field, double stored, double recomputed,
                   const std::filesystem::path& path) {
  if (!relatively_close(stored, recomputed)) {
    throw std::runtime_error(
        path.string() + ": manifest field '" + field + "' = " +
        format_double(stored) + " disagrees with the value recomputed from " +
        "the primary fields (" + format_double(recomputed) +
        "); the file was edited or written by an incompatible version");
  }
}

}  // namespace

std::string format_double(double value) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
  if (ec != std::errc{}) {
    throw std::runtime_error("format_double: conversion failed");
  }
  return std::string(buf, ptr);
}

void write_csv(const Matrix& m, const std::optional<std::vector<int>>& labels,
               const std::filesystem::path& path) {
  if (m.cols() == 0) {
    throw std::invalid_argument("write_csv: matrix has no columns");
  }
  if (!m.all_finite()) {
    throw std::invalid_argument("write_csv: values must be finite");
  }
  if (labels && labels->size() != m.rows()) {
    throw std::invalid_argument("write_csv: labels length does not match rows");
  }

  std::ostringstream out;
  for (std::size_t j = 0; j < m.cols(); ++j) {
    if (j > 0) {
      out << ',';
    }
    out << 'f' << j;
  }
  if (labels) {
    out << ",label";
  }
  out << '\n';
  for (std::size_t i = 0; i < m.rows(); ++i) {
    const auto row = m.row(i);
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j > 0) {
        out << ',';
      }
      out << format_double(row[j]);
    }
    if (labels) {
      out << ',' << (*labels)[i];
    }
    out << '\n';
  }

  std::ofstream file(path, std::ios::binary);
  if (!file) {
    throw std::runtime_error("write_csv: cannot open " + path.string());
  }
  file << out.str();
  if (!file) {
    throw std::runtime_error("write_csv: write failed for " + path.string());
  }
}

CsvDataset read_csv(const std::filesystem::path& path) {
  std::ifstream file(path, std::ios::binary);
  if (!file) {
    throw std::runtime_error("read_csv: cannot open " + path.string());
  }

  std::string line;
  if (!std::getline(file, line)) {
    throw std::runtime_error("read_csv: " + path.string() + " is empty");
  }
  const auto header = split_fields(line);
  bool has_labels = header.back() == "label";
  const std::size_t d = header.size() - (has_labels ? 1 : 0);
  if (d == 0) {
    parse_error(path, 1, "no feature columns in header");
  }
  for (std::size_t j = 0; j < d; ++j) {
    if (header[j] != "f" + std::to_string(j)) {
      parse_error(path, 1, "unexpected header column '" + std::string(header[j]) +
                    "' (expected f" + std::to_string(j) + ")");
    }
  }

  std::vector<double> values;
  std::vector<int> labels;
  std::size_t line_no = 1;
  while (std::getline(file, line)) {
    ++line_no;
    if (line.empty() && file.eof()) {
      break;
    }
    const auto fields = split_fields(line);
    if (fields.size() != header.size()) {
      parse_error(path, line_no,
                  "expected " + std::to_string(header.size()) + " fields, got " +
                      std::to_string(fields.size()));
    }
    for (std::size_t j = 0; j < d; ++j) {
      values.push_back(parse_double(fields[j], path, line_no));
    }
    if (has_labels) {
      const double label = parse_double(fields[d], path, line_no);
      const int as_int = static_cast<int>(label);
      if (static_cast<double>(as_int) != label) {
        parse_error(path, line_no, "label is not an integer");
      }
      labels.push_back(as_int);
    }
  }

  const std::size_t n = values.size() / d;
  CsvDataset result{Matrix(n, d, std::move(values)), std::nullopt};
  if (has_labels) {
    result.labels = std::move(labels);
  }
  return result;
}

void write_manifest(const RunManifest& m, const std::filesystem::path& path) {
  nlohmann::ordered_json j;
  j["schema_version"] = m.schema_version;
  j["command"] = m.command;
  j["timestamp"] = m.timestamp;
  j["seed"] = m.seed;
  j["mode"] = m.mode;
  j["epsilon"] = m.epsilon;
  j["k"] = m.k;
  j["d"] = m.d;
  j["n"] = m.n;
  j["alpha"] = m.alpha;
  j["t"] = m.t;
  j["t_multiplier"] = m.t_multiplier;
  j["c"] = m.c;
  j["b"] = m.b;
  j["sigma2"] = m.sigma2;
  j["failure_bound"] = m.failure_bound;
  j["vacuous_bound"] = m.vacuous_bound;
  j["labels_passthrough"] = m.labels_passthrough;

  std::ofstream file(path, std::ios::binary);
  if (!file) {
    throw std::runtime_error("write_manifest: cannot open " + path.string());
  }
  file << j.dump(2) << '\n';
  if (!file) {
    throw std::runtime_error("write_manifest: write failed for " + path.string());
  }
}

RunManifest read_manifest(const std::filesystem::path& path) {
  std::ifstream file(path, std::ios::binary);
  if (!file) {
    throw std::runtime_error("read_manifest: cannot open " + path.string());
  }
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(file);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::runtime_error("read_manifest: " + path.string() + ": " + e.what());
  }

  static const std::set<std::string> kKnown = {
      "schema_version", "command", "timestamp", "seed", "mode", "epsilon",
      "k", "d", "n", "alpha", "t", "t_multiplier", "c", "b", "sigma2",
      "failure_bound", "vacuous_bound", "labels_passthrough"};
  for (const auto& [key, value] : j.items()) {
    if (!kKnown.contains(key)) {
      throw std::runtime_error("read_manifest: " + path.string() +
                               ": unknown field '" + key + "'");
    }
  }
  for (const auto& key : kKnown) {
    if (!j.contains(key)) {
      throw std::runtime_error("read_manifest: " + path.string() +
                               ": missing field '" + key + "'");
    }
  }

  RunManifest m;
  m.schema_version = j.at("schema_version").get<std::string>();
  if (m.schema_version != kManifestSchemaVersion) {
    throw std::runtime_error("read_manifest: " + path.string() +
                             ": schema_version '" + m.schema_version +
                             "' is not supported (expected '" +
                             kManifestSchemaVersion + "')");
  }
  m.command = j.at("command").get<std::string>();
  m.timestamp = j.at("timestamp").get<std::string>();
  m.seed = j.at("seed").get<std::uint64_t>();
  m.mode = j.at("mode").get<std::string>();
  m.epsilon = j.at("epsilon").get<double>();
  m.k = j.at("k").get<std::uint64_t>();
  m.d = j.at("d").get<std::uint64_t>();
  m.n = j.at("n").get<std::uint64_t>();
  m.alpha = j.at("alpha").get<double>();
  m.t = j.at("t").get<double>();
  m.t_multiplier = j.at("t_multiplier").get<double>();
  m.c = j.at("c").get<double>();
  m.b = j.at("b").get<double>();
  m.sigma2 = j.at("sigma2").get<double>();
  m.failure_bound = j.at("failure_bound").get<double>();
  m.vacuous_bound = j.at("vacuous_bound").get<bool>();
  m.labels_passthrough = j.at("labels_passthrough").get<bool>();

  static const std::set<std::string> kModes = {"none",  "element", "row",
                                               "grid",  "curve",   "verify"};
  if (!kModes.contains(m.mode)) {
    throw std::runtime_error("read_manifest: " + path.string() +
                             ": unknown mode '" + m.mode + "'");
  }

  if (m.mode == "element") {
    const PrivacyParams p = calibrate_element_wise(m.k, m.epsilon, m.d);
    check_derived("c", m.c, p.c, path);
    check_derived("b", m.b, p.b, path);
    check_derived("sigma2", m.sigma2, p.sigma2, path);
    check_derived("failure_bound", m.failure_bound, p.failure_bound, path);
  } else if (m.mode == "row") {
    const PrivacyParams p =
        calibrate_row_wise(m.k, m.epsilon, m.alpha, m.t_multiplier);
    check_derived("t", m.t, p.t, path);
    check_derived("c", m.c, p.c, path);
    check_derived("b", m.b, p.b, path);
    check_derived("sigma2", m.sigma2, p.sigma2, path);
    check_derived("failure_bound", m.failure_bound, p.failure_bound, path);
  }
  return m;
}

}  // namespace jldp
