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

#include <cstdio>
#include <exception>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "jldp/experiments.hpp"
#include "jldp/privacy_params.hpp"

namespace {

using namespace jldp;
using namespace jldp::experiments;

std::vector<GridCell> parse_grid(const std::string& spec) {
  std::vector<GridCell> grid;
  std::size_t start = 0;
  while (start <= spec.size()) {
    const std::size_t comma = spec.find(',', start);
    const std::string cell = spec.substr(
        start, comma == std::string::npos ? std::string::npos : comma - start);
    const std::size_t colon = cell.find(':');
    if (colon == std::string::npos) {
      throw CLI::ValidationError("--grid", "expected d:k pairs, got '" + cell + "'");
    }
    try {
      grid.push_back({std::stoul(cell.substr(0, colon)),
                      std::stoul(cell.substr(colon + 1))});
    } catch (const std::exception&) {
      throw CLI::ValidationError("--grid", "expected d:k pairs, got '" + cell + "'");
    }
    if (comma == std::string::npos) {
      break;
    }
    start = comma + 1;
  }
  return grid;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "jldp: utility-preserving private data release via random projection "
      "plus Laplace noise, with distance recovery and experiment harness"};
  app.require_subcommand(1);

  // generate
  auto* generate = app.add_subcommand(
      "generate", "Write a synthetic two-cluster Gaussian dataset CSV");
  GenerateConfig gen_cfg;
  generate->add_option("--n-per-cluster", gen_cfg.n_per_cluster,
                       "Points per cluster")->capture_default_str();
  generate->add_option("--d", gen_cfg.d, "Data dimension")->capture_default_str();
  generate->add_option("--center-distance", gen_cfg.center_distance,
                       "Euclidean distance between the two cluster centers")
      ->capture_default_str();
  generate->add_option("--cluster-std", gen_cfg.cluster_std,
                       "Per-coordinate standard deviation inside a cluster")
      ->capture_default_str();
  generate->add_option("--seed", gen_cfg.seed, "Root seed")->capture_default_str();
  generate->add_option("--timestamp", gen_cfg.timestamp,
                       "Manifest timestamp override (default: now, UTC)");
  generate->add_option("--out", gen_cfg.out, "Output CSV path")->required();

  // release
  auto* rel = app.add_subcommand(
      "release", "Privately release a dataset CSV (projection + Laplace noise)");
  ReleaseConfig rel_cfg;
  std::string rel_mode = "element";
  rel->add_option("--in", rel_cfg.in, "Input dataset CSV")->required();
  rel->add_option("--mode", rel_mode, "Privacy mode: element or row")
      ->check(CLI::IsMember({"element", "row"}))->capture_default_str();
  rel->add_option("--epsilon", rel_cfg.epsilon, "Privacy budget")
      ->capture_default_str();
  rel->add_option("--k", rel_cfg.k, "Projection dimension")->capture_default_str();
  rel->add_option("--alpha", rel_cfg.alpha, "Row-difference bound (row mode)")
      ->capture_default_str();
  rel->add_option("--t-multiplier", rel_cfg.t_multiplier,
                  "Tail parameter multiplier >= 1 (row mode); 1 makes the "
                  "failure bound vacuous")->capture_default_str();
  rel->add_option("--seed", rel_cfg.seed, "Root seed")->capture_default_str();
  rel->add_option("--timestamp", rel_cfg.timestamp,
                  "Manifest timestamp override (default: now, UTC)");
  rel->add_option("--out", rel_cfg.out, "Output CSV path")->required();

  // table1
  auto* t1 = app.add_subcommand(
      "table1", "k-means accuracy grid: none vs element vs row privacy");
  Table1Config t1_cfg;
  std::string t1_grid = "3:2,10:3,50:10,100:20";
  t1->add_option("--grid", t1_grid, "Comma-separated d:k cells")
      ->capture_default_str();
  t1->add_option("--epsilon", t1_cfg.epsilon, "Privacy budget")
      ->capture_default_str();
  t1->add_option("--alpha", t1_cfg.alpha, "Row-difference bound (row mode)")
      ->capture_default_str();
  t1->add_option("--t-multiplier", t1_cfg.t_multiplier,
                 "Tail parameter multiplier (row mode)")->capture_default_str();
  t1->add_option("--n-per-cluster", t1_cfg.n_per_cluster, "Points per cluster")
      ->capture_default_str();
  t1->add_option("--seeds", t1_cfg.seeds, "Trials per cell")->capture_default_str();
  t1->add_option("--seed", t1_cfg.seed, "Root seed")->capture_default_str();
  t1->add_option("--timestamp", t1_cfg.timestamp,
                 "Manifest timestamp override (default: now, UTC)");
  t1->add_option("--out", t1_cfg.out,
                 "Output base path (writes .csv, .report.json, .manifest.json)")
      ->required();

  // distance-recovery
  auto* dr = app.add_subcommand(
      "distance-recovery",
      "Distribution of recovered-distance error over repeated releases");
  DistanceRecoveryConfig dr_cfg;
  std::string dr_mode = "element";
  dr->add_option("--pairs", dr_cfg.n_pairs, "Number of point pairs")
      ->capture_default_str();
  dr->add_option("--repeats", dr_cfg.n_repeats, "Releases per pair")
      ->capture_default_str();
  dr->add_option("--d", dr_cfg.d, "Data dimension")->capture_default_str();
  dr->add_option("--k", dr_cfg.k, "Projection dimension")->capture_default_str();
  dr->add_option("--mode", dr_mode, "Privacy mode: element or row")
      ->check(CLI::IsMember({"element", "row"}))->capture_default_str();
  dr->add_option("--epsilon", dr_cfg.epsilon, "Privacy budget")
      ->capture_default_str();
  dr->add_option("--alpha", dr_cfg.alpha, "Row-difference bound (row mode)")
      ->capture_default_str();
  dr->add_option("--t-multiplier", dr_cfg.t_multiplier,
                 "Tail parameter multiplier (row mode)")->capture_default_str();
  dr->add_option("--seed", dr_cfg.seed, "Root seed")->capture_default_str();
  dr->add_option("--timestamp", dr_cfg.timestamp,
                 "Manifest timestamp override (default: now, UTC)");
  dr->add_option("--out", dr_cfg.out,
                 "Output base path (writes .csv, .hist.csv, .report.json, "
                 ".manifest.json)")->required();

  // std-curve
  auto* sc = app.add_subcommand(
      "std-curve", "Released-data standard deviation sqrt(1 + 2 b^2) per k");
  StdCurveConfig sc_cfg;
  sc->add_option("--k-min", sc_cfg.k_min, "Smallest k")->capture_default_str();
  sc->add_option("--k-max", sc_cfg.k_max, "Largest k")->capture_default_str();
  sc->add_option("--epsilon", sc_cfg.epsilon, "Privacy budget")
      ->capture_default_str();
  sc->add_option("--alpha", sc_cfg.alpha, "Row-difference bound (row mode)")
      ->capture_default_str();
  sc->add_option("--t-multiplier", sc_cfg.t_multiplier,
                 "Tail parameter multiplier (row mode)")->capture_default_str();
  sc->add_option("--seed", sc_cfg.seed, "Root seed (recorded only)")
      ->capture_default_str();
  sc->add_option("--timestamp", sc_cfg.timestamp,
                 "Manifest timestamp override (default: now, UTC)");
  sc->add_option("--out", sc_cfg.out,
                 "Output base path (writes .csv, .report.json, .manifest.json)")
      ->required();

  // verify
  auto* ver = app.add_subcommand(
      "verify", "Run the statistical property suites and report pass/fail");
  VerifyConfig ver_cfg;
  std::string suites;
  for (const auto& name : verify_suite_names()) {
    suites += suites.empty() ? name : ", " + name;
  }
  ver->add_option("--suite", ver_cfg.suite, "One of: " + suites)
      ->capture_default_str();
  ver->add_option("--trials", ver_cfg.trials_scale,
                  "Trial-count multiplier for every suite")
      ->capture_default_str();
  ver->add_option("--seed", ver_cfg.seed, "Root seed")->capture_default_str();
  ver->add_option("--timestamp", ver_cfg.timestamp,
                  "Manifest timestamp override (default: now, UTC)");
  ver->add_option("--out", ver_cfg.out,
                  "Output base path (writes .report.json, .manifest.json)")
      ->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*generate) {
      run_generate(gen_cfg);
    } else if (*rel) {
      rel_cfg.mode = privacy_mode_from_string(rel_mode);
      run_release(rel_cfg);
    } else if (*t1) {
      t1_cfg.grid = parse_grid(t1_grid);
      run_table1(t1_cfg);
    } else if (*dr) {
      dr_cfg.mode = privacy_mode_from_string(dr_mode);
      run_distance_recovery(dr_cfg);
    } else if (*sc) {
      run_std_curve(sc_cfg);
    } else if (*ver) {
      const VerifyReport report = run_verify(ver_cfg);
      if (!report.all_pass) {
        std::fprintf(stderr, "verify: at least one property failed\n");
        return 1;
      }
    }
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  return 0;
}
