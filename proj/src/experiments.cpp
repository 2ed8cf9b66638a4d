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

#include "jldp/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <iterator>
#include <sstream>
#include <stdexcept>
#include <utility>

#include <json.hpp>

#include "jldp/clustering.hpp"
#include "jldp/datagen.hpp"
#include "jldp/diagnostics.hpp"
#include "jldp/io_formats.hpp"
#include "jldp/kernels.hpp"
#include "jldp/mechanism.hpp"
#include "jldp/noise.hpp"
#include "jldp/projection.hpp"
#include "jldp/recovery.hpp"

namespace jldp::experiments {
namespace {

using nlohmann::ordered_json;

double mean_of(const std::vector<double>& xs) {
  double sum = 0.0;
  for (double x : xs) {
    sum += x;
  }
  return sum / static_cast<double>(xs.size());
}

double sample_std(const std::vector<double>& xs, double mean) {
  if (xs.size() < 2) {
    return 0.0;
  }
  double sq = 0.0;
  for (double x : xs) {
    sq += (x - mean) * (x - mean);
  }
  return std::sqrt(sq / static_cast<double>(xs.size() - 1));
}

double sample_variance(const std::vector<double>& xs) {
  const double m = mean_of(xs);
  const double s = sample_std(xs, m);
  return s * s;
}

std::size_t scaled_trials(std::size_t base, double scale) {
  const double n = static_cast<double>(base) * scale;
  return n < 100.0 ? 100 : static_cast<std::size_t>(n);
}

std::string quote(const std::filesystem::path& p) {
  return "'" + p.string() + "'";
}

std::string resolve_timestamp(const std::string& given) {
  return given.empty() ? now_utc_iso8601() : given;
}

void write_text(const std::filesystem::path& path, const std::string& text) {
  std::ofstream file(path, std::ios::binary);
  if (!file) {
    throw std::runtime_error("cannot open " + path.string() + " for writing");
  }
  file << text;
  if (!file) {
    throw std::runtime_error("write failed for " + path.string());
  }
}

void write_report_json(const ordered_json& j, const std::filesystem::path& path) {
  write_text(path, j.dump(2) + "\n");
}

void fill_privacy_fields(RunManifest& m, const PrivacyParams& p) {
  m.mode = to_string(p.mode);
  m.epsilon = p.epsilon;
  m.k = p.k;
  m.alpha = p.alpha;
  m.t = p.t;
  m.t_multiplier = p.t_multiplier;
  m.c = p.c;
  m.b = p.b;
  m.sigma2 = p.sigma2;
  m.failure_bound = p.failure_bound;
  m.vacuous_bound = p.vacuous_bound;
}

void warn_if_vacuous(const PrivacyParams& p) {
  if (p.vacuous_bound) {
    std::fprintf(stderr,
                 "WARNING: the failure-probability bound is %s (clamped to 1): "
                 "the epsilon=%s guarantee is vacuous at this setting.%s\n",
                 format_double(p.failure_bound).c_str(),
                 format_double(p.epsilon).c_str(),
                 p.mode == PrivacyMode::kRowWise
                     ? " Raise --t-multiplier above 1 to obtain a real bound."
                     : " Raise k to obtain a real bound.");
  }
}

PrivacyParams calibrate(PrivacyMode mode, std::size_t k, double epsilon,
                        std::size_t d, double alpha, double t_multiplier) {
  return mode == PrivacyMode::kElementWise
             ? calibrate_element_wise(k, epsilon, d)
             : calibrate_row_wise(k, epsilon, alpha, t_multiplier);
}

// Hand-built params for verification sweeps that need a specific noise
// level rather than a calibrated one.
PrivacyParams params_with_sigma2(std::size_t k, double sigma2) {
  PrivacyParams p;
  p.mode = PrivacyMode::kElementWise;
  p.k = k;
  p.sigma2 = sigma2;
  p.b = std::sqrt(sigma2 / 2.0);
  p.epsilon = 1.0;
  p.c = p.b;
  p.failure_bound = 1.0;
  p.vacuous_bound = true;
  return p;
}

// A 2 x d database holding one point pair.
DataMatrix pair_matrix(std::span<const double> xi, std::span<const double> xj) {
  std::vector<double> values;
  values.reserve(2 * xi.size());
  values.insert(values.end(), xi.begin(), xi.end());
  values.insert(values.end(), xj.begin(), xj.end());
  return DataMatrix(2, xi.size(), std::move(values));
}

}  // namespace

std::string now_utc_iso8601() {
  const std::time_t now = std::time(nullptr);
  std::tm utc{};
  gmtime_r(&now, &utc);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &utc);
  return buf;
}

std::filesystem::path with_suffix(const std::filesystem::path& base,
                                  const std::string& suffix) {
  std::filesystem::path p = base;
  p.replace_extension("");
  p += suffix;
  return p;
}

// ---------------------------------------------------------------------------
// generate
// ---------------------------------------------------------------------------

void run_generate(GenerateConfig cfg) {
  cfg.timestamp = resolve_timestamp(cfg.timestamp);

  const LabeledDataset dataset =
      make_blobs(cfg.n_per_cluster, cfg.d, cfg.center_distance,
                 cfg.cluster_std, RngSeed{cfg.seed, 0});
  write_csv(dataset.data.values(), dataset.labels, cfg.out);

  RunManifest m;
  m.timestamp = cfg.timestamp;
  m.seed = cfg.seed;
  m.mode = "none";
  m.d = cfg.d;
  m.n = 2 * cfg.n_per_cluster;
  m.labels_passthrough = true;
  std::ostringstream cmd;
  cmd << "jldp generate --n-per-cluster " << cfg.n_per_cluster << " --d "
      << cfg.d << " --center-distance " << format_double(cfg.center_distance)
      << " --cluster-std " << format_double(cfg.cluster_std) << " --seed "
      << cfg.seed << " --timestamp " << cfg.timestamp << " --out "
      << quote(cfg.out);
  m.command = cmd.str();
  write_manifest(m, with_suffix(cfg.out, ".manifest.json"));
}

// ---------------------------------------------------------------------------
// release
// ---------------------------------------------------------------------------

void run_release(ReleaseConfig cfg) {
  cfg.timestamp = resolve_timestamp(cfg.timestamp);

  const CsvDataset input = read_csv(cfg.in);
  const DataMatrix x(input.values);
  const PrivacyParams params = calibrate(cfg.mode, cfg.k, cfg.epsilon,
                                         x.cols(), cfg.alpha, cfg.t_multiplier);
  warn_if_vacuous(params);
  if (cfg.k >= x.cols()) {
    std::fprintf(stderr,
                 "warning: k=%zu >= d=%zu; the release is not a "
                 "dimensionality reduction\n",
                 cfg.k, x.cols());
  }
  std::fprintf(stderr,
               "note: implied worst-case distance distortion for k=%zu, "
               "n=%zu is %.3f (values above 1 mean k is too small for "
               "worst-case guarantees)\n",
               cfg.k, x.rows(), implied_distortion(cfg.k, x.rows()));

  const ReleasedMatrix released = release(x, params, RngSeed{cfg.seed, 0});
  write_csv(released.z, input.labels, cfg.out);

  RunManifest m;
  m.timestamp = cfg.timestamp;
  m.seed = cfg.seed;
  fill_privacy_fields(m, params);
  m.d = x.cols();
  m.n = x.rows();
  m.labels_passthrough = input.labels.has_value();
  std::ostringstream cmd;
  cmd << "jldp release --in " << quote(cfg.in) << " --mode "
      << to_string(cfg.mode) << " --epsilon " << format_double(cfg.epsilon)
      << " --k " << cfg.k << " --alpha " << format_double(cfg.alpha)
      << " --t-multiplier " << format_double(cfg.t_multiplier) << " --seed "
      << cfg.seed << " --timestamp " << cfg.timestamp << " --out "
      << quote(cfg.out);
  m.command = cmd.str();
  write_manifest(m, with_suffix(cfg.out, ".manifest.json"));
}

// ---------------------------------------------------------------------------
// table1
// ---------------------------------------------------------------------------

Table1Report run_table1(Table1Config cfg) {
  cfg.timestamp = resolve_timestamp(cfg.timestamp);
  if (cfg.grid.empty()) {
    throw std::invalid_argument("table1: the (d, k) grid is empty");
  }
  if (cfg.seeds < 1) {
    throw std::invalid_argument("table1: need at least one seed");
  }
  for (const GridCell& cell : cfg.grid) {
    // Validate every cell before entering the parallel sweep.
    calibrate_element_wise(cell.k, cfg.epsilon, cell.d);
    calibrate_row_wise(cell.k, cfg.epsilon, cfg.alpha, cfg.t_multiplier);
  }

  const RngSeed root{cfg.seed, 0};
  const std::size_t total = cfg.grid.size() * cfg.seeds;
  struct TrialAccuracy {
    double none = 0.0;
    double element = 0.0;
    double row = 0.0;
  };
  std::vector<TrialAccuracy> acc(total);

  kernels::parallel_trials(total, [&](std::size_t trial) {
    const GridCell cell = cfg.grid[trial / cfg.seeds];
    const RngSeed base = derive_stream(root, trial);
    const LabeledDataset ds = make_blobs(cfg.n_per_cluster, cell.d, 4.0, 1.0,
                                         derive_stream(base, 0));

    const ClusteringResult none =
        kmeans(ds.data.values(), 2, derive_stream(base, 3));
    acc[trial].none = clustering_accuracy(none.assignments, ds.labels);

    const PrivacyParams pe = calibrate_element_wise(cell.k, cfg.epsilon, cell.d);
    const ReleasedMatrix ze = release(ds.data, pe, derive_stream(base, 1));
    const ClusteringResult el = kmeans(ze.z, 2, derive_stream(base, 4));
    acc[trial].element = clustering_accuracy(el.assignments, ds.labels);

    const PrivacyParams pr =
        calibrate_row_wise(cell.k, cfg.epsilon, cfg.alpha, cfg.t_multiplier);
    const ReleasedMatrix zr = release(ds.data, pr, derive_stream(base, 2));
    const ClusteringResult ro = kmeans(zr.z, 2, derive_stream(base, 5));
    acc[trial].row = clustering_accuracy(ro.assignments, ds.labels);
  });

  Table1Report report;
  for (std::size_t c = 0; c < cfg.grid.size(); ++c) {
    const GridCell cell = cfg.grid[c];
    std::vector<double> per_mode[3];
    for (std::size_t s = 0; s < cfg.seeds; ++s) {
      const TrialAccuracy& a = acc[c * cfg.seeds + s];
      per_mode[0].push_back(a.none);
      per_mode[1].push_back(a.element);
      per_mode[2].push_back(a.row);
    }
    const char* names[3] = {"none", "element", "row"};
    for (int mi = 0; mi < 3; ++mi) {
      Table1Cell out;
      out.d = cell.d;
      out.k = cell.k;
      out.mode = names[mi];
      out.mean_accuracy = mean_of(per_mode[mi]);
      out.std_accuracy = sample_std(per_mode[mi], out.mean_accuracy);
      out.std_error =
          out.std_accuracy / std::sqrt(static_cast<double>(cfg.seeds));
      out.trials = cfg.seeds;
      report.cells.push_back(out);
    }
  }

  // cells CSV
  std::ostringstream csv;
  csv << "d,k,mode,mean_accuracy,std_accuracy,std_error,trials\n";
  for (const Table1Cell& cell : report.cells) {
    csv << cell.d << ',' << cell.k << ',' << cell.mode << ','
        << format_double(cell.mean_accuracy) << ','
        << format_double(cell.std_accuracy) << ','
        << format_double(cell.std_error) << ',' << cell.trials << '\n';
  }
  write_text(with_suffix(cfg.out, ".csv"), csv.str());

  // grid as "d:k,d:k"
  std::ostringstream grid;
  for (std::size_t c = 0; c < cfg.grid.size(); ++c) {
    if (c > 0) {
      grid << ',';
    }
    grid << cfg.grid[c].d << ':' << cfg.grid[c].k;
  }

  RunManifest m;
  m.timestamp = cfg.timestamp;
  m.seed = cfg.seed;
  m.mode = "grid";
  m.epsilon = cfg.epsilon;
  m.alpha = cfg.alpha;
  m.t_multiplier = cfg.t_multiplier;
  m.n = 2 * cfg.n_per_cluster;
  std::ostringstream cmd;
  cmd << "jldp table1 --grid " << grid.str() << " --epsilon "
      << format_double(cfg.epsilon) << " --alpha " << format_double(cfg.alpha)
      << " --t-multiplier " << format_double(cfg.t_multiplier)
      << " --n-per-cluster " << cfg.n_per_cluster << " --seeds " << cfg.seeds
      << " --seed " << cfg.seed << " --timestamp " << cfg.timestamp
      << " --out " << quote(cfg.out);
  m.command = cmd.str();
  const auto manifest_path = with_suffix(cfg.out, ".manifest.json");
  write_manifest(m, manifest_path);

  ordered_json j;
  j["experiment"] = "table1";
  j["config"] = {{"grid", grid.str()},
                 {"epsilon", cfg.epsilon},
                 {"alpha", cfg.alpha},
                 {"t_multiplier", cfg.t_multiplier},
                 {"n_per_cluster", cfg.n_per_cluster},
                 {"seeds", cfg.seeds},
                 {"seed", cfg.seed}};
  j["cells"] = ordered_json::array();
  for (const Table1Cell& cell : report.cells) {
    j["cells"].push_back({{"d", cell.d},
                          {"k", cell.k},
                          {"mode", cell.mode},
                          {"mean_accuracy", cell.mean_accuracy},
                          {"std_accuracy", cell.std_accuracy},
                          {"std_error", cell.std_error},
                          {"trials", cell.trials}});
  }
  j["manifest"] = manifest_path.filename().string();
  write_report_json(j, with_suffix(cfg.out, ".report.json"));

  return report;
}

// ---------------------------------------------------------------------------
// distance-recovery
// ---------------------------------------------------------------------------

DistanceRecoveryReport run_distance_recovery(DistanceRecoveryConfig cfg) {
  cfg.timestamp = resolve_timestamp(cfg.timestamp);
  if (cfg.n_pairs < 1 || cfg.n_repeats < 1) {
    throw std::invalid_argument("distance-recovery: n_pairs and n_repeats must be >= 1");
  }

  const RngSeed root{cfg.seed, 0};
  const PrivacyParams params = calibrate(cfg.mode, cfg.k, cfg.epsilon, cfg.d,
                                         cfg.alpha, cfg.t_multiplier);
  warn_if_vacuous(params);

  // Fixed experimental dataset: 1000 points per cluster, center distance 4,
  // unit cluster std.
  const LabeledDataset ds = make_blobs(1000, cfg.d, 4.0, 1.0, derive_stream(root, 0));
  const std::size_t n = ds.data.rows();

  Rng pair_gen(derive_stream(root, 1));
  std::vector<std::pair<std::size_t, std::size_t>> pairs(cfg.n_pairs);
  std::vector<double> true_d2(cfg.n_pairs);
  for (std::size_t p = 0; p < cfg.n_pairs; ++p) {
    const std::size_t i = static_cast<std::size_t>(pair_gen.next_u64() % n);
    std::size_t j = i;
    while (j == i) {
      j = static_cast<std::size_t>(pair_gen.next_u64() % n);
    }
    pairs[p] = {i, j};
    true_d2[p] = kernels::squared_distance(ds.data.row(i), ds.data.row(j));
  }

  const RngSeed release_root = derive_stream(root, 2);
  const std::size_t total = cfg.n_pairs * cfg.n_repeats;
  std::vector<double> diffs(total);
  kernels::parallel_trials(total, [&](std::size_t trial) {
    const std::size_t p = trial / cfg.n_repeats;
    const DataMatrix two = pair_matrix(ds.data.row(pairs[p].first),
                                       ds.data.row(pairs[p].second));
    const ReleasedMatrix z =
        release(two, params, derive_stream(release_root, trial));
    const RecoveredDistance rec =
        recover_distance(z.z.row(0), z.z.row(1), params.k, params.sigma2);
    diffs[trial] = rec.estimate - true_d2[p];
  });

  DistanceRecoveryReport report;
  report.n_differences = total;
  report.mean_difference = mean_of(diffs);
  report.std_difference = sample_std(diffs, report.mean_difference);
  report.std_error =
      report.std_difference / std::sqrt(static_cast<double>(total));

  // Raw differences as a one-column matrix.
  write_csv(Matrix(total, 1, diffs), std::nullopt, with_suffix(cfg.out, ".csv"));

  // 101-bin histogram over [-max|diff|, +max|diff|].
  double max_abs = 0.0;
  for (double dff : diffs) {
    max_abs = std::max(max_abs, std::fabs(dff));
  }
  if (max_abs == 0.0) {
    max_abs = 1.0;
  }
  constexpr std::size_t kBins = 101;
  std::vector<std::size_t> counts(kBins, 0);
  const double width = 2.0 * max_abs / static_cast<double>(kBins);
  for (double dff : diffs) {
    auto bin = static_cast<std::size_t>((dff + max_abs) / width);
    if (bin >= kBins) {
      bin = kBins - 1;
    }
    ++counts[bin];
  }
  std::ostringstream hist;
  hist << "bin_left,bin_right,count\n";
  for (std::size_t bin = 0; bin < kBins; ++bin) {
    hist << format_double(-max_abs + width * static_cast<double>(bin)) << ','
         << format_double(-max_abs + width * static_cast<double>(bin + 1))
         << ',' << counts[bin] << '\n';
  }
  write_text(with_suffix(cfg.out, ".hist.csv"), hist.str());

  RunManifest m;
  m.timestamp = cfg.timestamp;
  m.seed = cfg.seed;
  fill_privacy_fields(m, params);
  m.d = cfg.d;
  m.n = n;
  std::ostringstream cmd;
  cmd << "jldp distance-recovery --pairs " << cfg.n_pairs << " --repeats "
      << cfg.n_repeats << " --d " << cfg.d << " --k " << cfg.k << " --mode "
      << to_string(cfg.mode) << " --epsilon " << format_double(cfg.epsilon)
      << " --alpha " << format_double(cfg.alpha) << " --t-multiplier "
      << format_double(cfg.t_multiplier) << " --seed " << cfg.seed
      << " --timestamp " << cfg.timestamp << " --out " << quote(cfg.out);
  m.command = cmd.str();
  const auto manifest_path = with_suffix(cfg.out, ".manifest.json");
  write_manifest(m, manifest_path);

  ordered_json j;
  j["experiment"] = "distance_recovery";
  j["config"] = {{"n_pairs", cfg.n_pairs},
                 {"n_repeats", cfg.n_repeats},
                 {"d", cfg.d},
                 {"k", cfg.k},
                 {"mode", to_string(cfg.mode)},
                 {"epsilon", cfg.epsilon},
                 {"alpha", cfg.alpha},
                 {"t_multiplier", cfg.t_multiplier},
                 {"seed", cfg.seed}};
  j["results"] = {{"mean_difference", report.mean_difference},
                  {"std_difference", report.std_difference},
                  {"std_error", report.std_error},
                  {"n_differences", report.n_differences}};
  j["manifest"] = manifest_path.filename().string();
  write_report_json(j, with_suffix(cfg.out, ".report.json"));

  std::printf("distance-recovery (%s): mean difference %s over %zu draws "
              "(std error %s)\n",
              to_string(cfg.mode).c_str(),
              format_double(report.mean_difference).c_str(), total,
              format_double(report.std_error).c_str());
  return report;
}

// ---------------------------------------------------------------------------
// std-curve
// ---------------------------------------------------------------------------

StdCurveReport run_std_curve(StdCurveConfig cfg) {
  cfg.timestamp = resolve_timestamp(cfg.timestamp);
  if (cfg.k_min < 1 || cfg.k_max < cfg.k_min) {
    throw std::invalid_argument("std-curve: need 1 <= k_min <= k_max");
  }

  StdCurveReport report;
  for (std::size_t k = cfg.k_min; k <= cfg.k_max; ++k) {
    // Element-wise b does not depend on d; d=1 keeps the calibration happy.
    const PrivacyParams pe = calibrate_element_wise(k, cfg.epsilon, 1);
    const PrivacyParams pr =
        calibrate_row_wise(k, cfg.epsilon, cfg.alpha, cfg.t_multiplier);
    report.points.push_back(
        {k, "element", pe.b, std::sqrt(1.0 + 2.0 * pe.b * pe.b)});
    report.points.push_back(
        {k, "row", pr.b, std::sqrt(1.0 + 2.0 * pr.b * pr.b)});
  }

  std::ostringstream csv;
  csv << "k,mode,b,std\n";
  for (const StdCurvePoint& pt : report.points) {
    csv << pt.k << ',' << pt.mode << ',' << format_double(pt.b) << ','
        << format_double(pt.std) << '\n';
  }
  write_text(with_suffix(cfg.out, ".csv"), csv.str());

  RunManifest m;
  m.timestamp = cfg.timestamp;
  m.seed = cfg.seed;
  m.mode = "curve";
  m.epsilon = cfg.epsilon;
  m.alpha = cfg.alpha;
  m.t_multiplier = cfg.t_multiplier;
  std::ostringstream cmd;
  cmd << "jldp std-curve --k-min " << cfg.k_min << " --k-max " << cfg.k_max
      << " --epsilon " << format_double(cfg.epsilon) << " --alpha "
      << format_double(cfg.alpha) << " --t-multiplier "
      << format_double(cfg.t_multiplier) << " --seed " << cfg.seed
      << " --timestamp " << cfg.timestamp << " --out " << quote(cfg.out);
  m.command = cmd.str();
  const auto manifest_path = with_suffix(cfg.out, ".manifest.json");
  write_manifest(m, manifest_path);

  ordered_json j;
  j["experiment"] = "std_curve";
  j["config"] = {{"k_min", cfg.k_min},
                 {"k_max", cfg.k_max},
                 {"epsilon", cfg.epsilon},
                 {"alpha", cfg.alpha},
                 {"t_multiplier", cfg.t_multiplier},
                 {"seed", cfg.seed}};
  j["points"] = ordered_json::array();
  for (const StdCurvePoint& pt : report.points) {
    j["points"].push_back(
        {{"k", pt.k}, {"mode", pt.mode}, {"b", pt.b}, {"std", pt.std}});
  }
  j["manifest"] = manifest_path.filename().string();
  write_report_json(j, with_suffix(cfg.out, ".report.json"));

  return report;
}

// ---------------------------------------------------------------------------
// verify suites
// ---------------------------------------------------------------------------

namespace {

double relative_error(double observed, double expected) {
  return std::fabs(observed - expected) / std::fabs(expected);
}

// Projection preserves squared distances in expectation: for fixed pairs,
// the Monte-Carlo mean of ||x P - y P||^2 over fresh P matches ||x - y||^2
// within 1% relative.
std::vector<PropertyResult> suite_jl(RngSeed stream, double scale) {
  constexpr std::size_t d = 50;
  constexpr std::size_t k = 10;
  constexpr std::size_t n_pairs = 5;
  const std::size_t trials = scaled_trials(100000, scale);

  Rng setup(derive_stream(stream, 0));
  std::vector<std::vector<double>> diffs(n_pairs, std::vector<double>(d));
  std::vector<double> true_d2(n_pairs);
  for (std::size_t p = 0; p < n_pairs; ++p) {
    const double spread = 0.5 + 2.5 * setup.next_open01();
    double sq = 0.0;
    for (std::size_t j = 0; j < d; ++j) {
      diffs[p][j] = setup.next_gaussian() * spread;
      sq += diffs[p][j] * diffs[p][j];
    }
    true_d2[p] = sq;
  }

  const RngSeed trial_root = derive_stream(stream, 1);
  std::vector<double> slots(trials * n_pairs);
  kernels::parallel_trials(trials, [&](std::size_t t) {
    const ProjectionMatrix p =
        sample_projection(d, k, derive_stream(trial_root, t));
    for (std::size_t pair = 0; pair < n_pairs; ++pair) {
      double y[k] = {};
      for (std::size_t j = 0; j < d; ++j) {
        const double a = diffs[pair][j];
        const double* row = p.values.data() + j * k;
        for (std::size_t i = 0; i < k; ++i) {
          y[i] += a * row[i];
        }
      }
      double sq = 0.0;
      for (std::size_t i = 0; i < k; ++i) {
        sq += y[i] * y[i];
      }
      slots[t * n_pairs + pair] = sq;
    }
  });

  double max_rel = 0.0;
  std::ostringstream detail;
  for (std::size_t pair = 0; pair < n_pairs; ++pair) {
    double sum = 0.0;
    for (std::size_t t = 0; t < trials; ++t) {
      sum += slots[t * n_pairs + pair];
    }
    const double rel = relative_error(sum / static_cast<double>(trials),
                                      true_d2[pair]);
    max_rel = std::max(max_rel, rel);
    if (pair > 0) {
      detail << ' ';
    }
    detail << format_double(rel);
  }
  return {{"jl/unbiasedness", max_rel <= 0.01, max_rel, 0.01, trials,
           "per-pair relative errors: " + detail.str()}};
}

// Single-element neighboring databases: ||XA - X'A||_1 never exceeds
// sqrt(k) max_i ||A_i||_2 when the changed element moves by at most 1.
std::vector<PropertyResult> suite_sensitivity(RngSeed stream, double scale) {
  constexpr std::size_t n = 4;
  constexpr std::size_t d = 8;
  constexpr std::size_t k = 6;
  const std::size_t trials = scaled_trials(10000, scale);

  std::vector<char> violated(trials, 0);
  std::vector<double> ratios(trials, 0.0);
  kernels::parallel_trials(trials, [&](std::size_t t) {
    Rng gen(derive_stream(stream, t));
    std::vector<double> xv(n * d);
    for (double& v : xv) {
      v = gen.next_gaussian();
    }
    std::vector<double> xv2 = xv;
    const std::size_t pos = static_cast<std::size_t>(gen.next_u64() % (n * d));
    xv2[pos] += 2.0 * gen.next_open01() - 1.0;  // |change| <= 1

    Matrix a(d, k);
    for (std::size_t i = 0; i < d * k; ++i) {
      a.data()[i] = gen.next_gaussian();
    }
    const Matrix x1(n, d, std::move(xv));
    const Matrix x2(n, d, std::move(xv2));
    Matrix y1(n, k);
    Matrix y2(n, k);
    kernels::matmul_serial(x1, a, y1);
    kernels::matmul_serial(x2, a, y2);

    double lhs = 0.0;
    for (std::size_t i = 0; i < n * k; ++i) {
      lhs += std::fabs(y1.data()[i] - y2.data()[i]);
    }
    const double rhs =
        std::sqrt(static_cast<double>(k)) * max_row_norm2(ProjectionMatrix{a});
    violated[t] = lhs > rhs ? 1 : 0;
    ratios[t] = lhs / rhs;
  });

  std::size_t violations = 0;
  double max_ratio = 0.0;
  for (std::size_t t = 0; t < trials; ++t) {
    violations += violated[t];
    max_ratio = std::max(max_ratio, ratios[t]);
  }
  return {{"sensitivity/single-element", violations == 0,
           static_cast<double>(violations), 0.0, trials,
           "max lhs/rhs ratio " + format_double(max_ratio)}};
}

// Tail bound on the largest projection row norm:
// P[max_i ||P_i||_2 > 1 + sqrt(2x/k)] <= d exp(-x).
std::vector<PropertyResult> suite_row_norm_tail(RngSeed stream, double scale) {
  constexpr std::size_t d = 50;
  constexpr std::size_t k = 10;
  const std::size_t trials = scaled_trials(100000, scale);

  std::vector<double> norms(trials);
  kernels::parallel_trials(trials, [&](std::size_t t) {
    norms[t] = max_row_norm2(sample_projection(d, k, derive_stream(stream, t)));
  });

  std::vector<PropertyResult> results;
  for (const double x : {3.0, 5.0}) {
    const double threshold = 1.0 + std::sqrt(2.0 * x / static_cast<double>(k));
    std::size_t exceed = 0;
    for (double norm : norms) {
      if (norm > threshold) {
        ++exceed;
      }
    }
    const double freq =
        static_cast<double>(exceed) / static_cast<double>(trials);
    const double bound = static_cast<double>(d) * std::exp(-x);
    results.push_back({"row-norm-tail/x=" + format_double(x), freq <= bound,
                       freq, bound, trials,
                       "threshold " + format_double(threshold)});
  }
  return results;
}

// Per-coordinate sub-Gaussian tail: P[|sum_j v_j P_ji| > t] is at most
// 2 exp(-k t^2 / (2 ||v||^2)) for every output coordinate i.
std::vector<PropertyResult> suite_coordinate_tail(RngSeed stream, double scale) {
  constexpr std::size_t d = 30;
  constexpr std::size_t k = 10;
  const std::size_t trials = scaled_trials(20000, scale);

  Rng setup(derive_stream(stream, 0));
  std::vector<double> v(d);
  double v2 = 0.0;
  for (std::size_t j = 0; j < d; ++j) {
    v[j] = setup.next_gaussian();
    v2 += v[j] * v[j];
  }

  const RngSeed trial_root = derive_stream(stream, 1);
  std::vector<double> slots(trials * k);
  kernels::parallel_trials(trials, [&](std::size_t t) {
    const ProjectionMatrix p =
        sample_projection(d, k, derive_stream(trial_root, t));
    double y[k] = {};
    for (std::size_t j = 0; j < d; ++j) {
      const double* row = p.values.data() + j * k;
      for (std::size_t i = 0; i < k; ++i) {
        y[i] += v[j] * row[i];
      }
    }
    for (std::size_t i = 0; i < k; ++i) {
      slots[t * k + i] = y[i];
    }
  });

  // t values are scaled to ||v|| so the grid probes comparable tail depths
  // regardless of the sampled v.
  const double vnorm = std::sqrt(v2);
  std::vector<PropertyResult> results;
  for (const double frac : {0.15, 0.3, 0.45}) {
    const double tv = frac * vnorm;
    const double bound =
        2.0 * std::exp(-static_cast<double>(k) * tv * tv / (2.0 * v2));
    double worst = 0.0;
    for (std::size_t i = 0; i < k; ++i) {
      std::size_t exceed = 0;
      for (std::size_t t = 0; t < trials; ++t) {
        if (std::fabs(slots[t * k + i]) > tv) {
          ++exceed;
        }
      }
      worst = std::max(
          worst, static_cast<double>(exceed) / static_cast<double>(trials));
    }
    results.push_back({"coordinate-tail/t=" + format_double(frac) + "|v|",
                       worst <= bound, worst, bound, trials,
                       "worst coordinate frequency vs bound"});
  }
  return results;
}

// The distance estimator is unbiased and its cross term has zero mean:
// for random pairs, the Monte-Carlo mean must sit within 3 standard errors.
std::vector<PropertyResult> suite_unbiased(RngSeed stream, double scale) {
  constexpr std::size_t n_pairs = 20;
  const std::size_t trials = scaled_trials(10000, scale);

  Rng setup(derive_stream(stream, 0));
  double max_z_estimate = 0.0;
  double max_z_cross = 0.0;
  std::vector<double> est(trials);
  std::vector<double> cross(trials);

  for (std::size_t pair = 0; pair < n_pairs; ++pair) {
    const std::size_t d = 2 + static_cast<std::size_t>(setup.next_u64() % 19);
    const double spread = 0.5 + 4.5 * setup.next_open01();
    std::vector<double> xi(d);
    std::vector<double> xj(d);
    for (std::size_t j = 0; j < d; ++j) {
      xi[j] = setup.next_gaussian() * spread;
      xj[j] = setup.next_gaussian() * spread;
    }
    const double true_d2 = kernels::squared_distance(xi, xj);
    const DataMatrix two = pair_matrix(xi, xj);
    const PrivacyParams params = calibrate_element_wise(4, 4.0, d);  // b = 1

    const RngSeed pair_root = derive_stream(stream, 1 + pair);
    kernels::parallel_trials(trials, [&](std::size_t t) {
      const auto tr = diagnostics::release_with_transcript(
          two, params, derive_stream(pair_root, t));
      const auto z0 = tr.released.z.row(0);
      const auto z1 = tr.released.z.row(1);
      est[t] = recover_distance(z0, z1, params.k, params.sigma2).estimate;
      const auto d0 = tr.noise.values.row(0);
      const auto d1 = tr.noise.values.row(1);
      double cr = 0.0;
      for (std::size_t i = 0; i < params.k; ++i) {
        const double proj_diff = (z0[i] - d0[i]) - (z1[i] - d1[i]);
        cr += proj_diff * (d0[i] - d1[i]);
      }
      cross[t] = 2.0 * cr;
    });

    const double mean_est = mean_of(est);
    const double se_est =
        sample_std(est, mean_est) / std::sqrt(static_cast<double>(trials));
    max_z_estimate =
        std::max(max_z_estimate, std::fabs(mean_est - true_d2) / se_est);

    const double mean_cross = mean_of(cross);
    const double se_cross =
        sample_std(cross, mean_cross) / std::sqrt(static_cast<double>(trials));
    max_z_cross = std::max(max_z_cross, std::fabs(mean_cross) / se_cross);
  }

  return {{"unbiased/estimator", max_z_estimate <= 3.0, max_z_estimate, 3.0,
           trials, "max |mean - true| / SE over 20 pairs"},
          {"unbiased/cross-term-zero-mean", max_z_cross <= 3.0, max_z_cross,
           3.0, trials, "max |mean| / SE over 20 pairs"}};
}

// Variance decomposition of the estimator at k=10, sigma2=2, dist2=16:
// projection term 51.2, noise term 560, cross term 256 (coefficient
// 8 sigma2, twice the uncorrected closed form's 4 sigma2).
std::vector<PropertyResult> suite_variance(RngSeed stream, double scale) {
  constexpr std::size_t d = 10;
  constexpr std::size_t k = 10;
  constexpr double sigma2 = 2.0;
  constexpr double dist2 = 16.0;
  const std::size_t trials = scaled_trials(200000, scale);

  std::vector<double> xi(d, 0.0);
  const std::vector<double> xj(d, 0.0);
  xi[0] = std::sqrt(dist2);
  const DataMatrix two = pair_matrix(xi, xj);
  const PrivacyParams params = params_with_sigma2(k, sigma2);

  std::vector<double> z1(trials);
  std::vector<double> z2(trials);
  std::vector<double> z3(trials);
  std::vector<double> dd(trials);
  kernels::parallel_trials(trials, [&](std::size_t t) {
    const auto tr =
        diagnostics::release_with_transcript(two, params, derive_stream(stream, t));
    const auto r0 = tr.released.z.row(0);
    const auto r1 = tr.released.z.row(1);
    const auto n0 = tr.noise.values.row(0);
    const auto n1 = tr.noise.values.row(1);
    double proj_sq = 0.0;
    double noise_sq = 0.0;
    double cr = 0.0;
    for (std::size_t i = 0; i < k; ++i) {
      const double proj_diff = (r0[i] - n0[i]) - (r1[i] - n1[i]);
      const double noise_diff = n0[i] - n1[i];
      proj_sq += proj_diff * proj_diff;
      noise_sq += noise_diff * noise_diff;
      cr += proj_diff * noise_diff;
    }
    z1[t] = proj_sq;
    z2[t] = noise_sq;
    z3[t] = 2.0 * cr;
    dd[t] = proj_sq + noise_sq + 2.0 * cr - 2.0 * static_cast<double>(k) * sigma2;
  });

  const VarianceReport analytic = analytic_variance(dist2, k, sigma2);
  const double var1 = sample_variance(z1);
  const double var2 = sample_variance(z2);
  const double var3 = sample_variance(z3);
  const double var_total = sample_variance(dd);
  const double coeff = var3 / (sigma2 * dist2);

  std::vector<PropertyResult> results;
  results.push_back({"variance/projection-term",
                     relative_error(var1, analytic.var_projection) <= 0.05,
                     var1, analytic.var_projection, trials,
                     "Monte-Carlo vs closed form, 5% relative"});
  results.push_back({"variance/noise-term",
                     relative_error(var2, analytic.var_noise) <= 0.05, var2,
                     analytic.var_noise, trials,
                     "Monte-Carlo vs closed form, 5% relative"});
  results.push_back({"variance/cross-term",
                     relative_error(var3, analytic.var_cross) <= 0.02, var3,
                     analytic.var_cross, trials,
                     "observed coefficient " + format_double(coeff) +
                         " * sigma2 * dist2; the uncorrected closed form uses 4"});
  results.push_back(
      {"variance/total", relative_error(var_total, analytic.total) <= 0.03,
       var_total, analytic.total, trials,
       "corrected total " + format_double(analytic.total) +
           " vs uncorrected " + format_double(analytic.uncorrected_total) +
           " (discrepancy " +
           format_double(analytic.total - analytic.uncorrected_total) + ")"});
  return results;
}

// Empirical error exceedance never beats the Chebyshev bound
// min(1, Var / lambda^2) across noise levels and distances.
std::vector<PropertyResult> suite_chebyshev(RngSeed stream, double scale) {
  struct Config {
    std::size_t k;
    double sigma2;
    double dist2;
    std::size_t d;
  };
  const std::vector<Config> configs = {
      {10, 2.0, 16.0, 12}, {2, 1.0, 4.0, 4}, {5, 0.5, 9.0, 8}};
  const std::size_t trials = scaled_trials(10000, scale);

  std::vector<PropertyResult> results;
  std::vector<double> est(trials);
  for (std::size_t ci = 0; ci < configs.size(); ++ci) {
    const Config& c = configs[ci];
    std::vector<double> xi(c.d, 0.0);
    const std::vector<double> xj(c.d, 0.0);
    xi[0] = std::sqrt(c.dist2);
    const DataMatrix two = pair_matrix(xi, xj);
    const PrivacyParams params = params_with_sigma2(c.k, c.sigma2);
    const RngSeed config_root = derive_stream(stream, ci);

    kernels::parallel_trials(trials, [&](std::size_t t) {
      const ReleasedMatrix z =
          release(two, params, derive_stream(config_root, t));
      est[t] =
          recover_distance(z.z.row(0), z.z.row(1), c.k, c.sigma2).estimate;
    });

    const double variance = analytic_variance(c.dist2, c.k, c.sigma2).total;
    for (const double mult : {5.0, 10.0, 20.0}) {
      const double lambda = mult * c.sigma2;
      std::size_t exceed = 0;
      for (double e : est) {
        if (std::fabs(e - c.dist2) > lambda) {
          ++exceed;
        }
      }
      const double freq =
          static_cast<double>(exceed) / static_cast<double>(trials);
      const double bound = chebyshev_error_bound(variance, lambda);
      results.push_back(
          {"chebyshev/k=" + std::to_string(c.k) + ",lambda=" +
               format_double(mult) + "sigma2",
           freq <= bound, freq, bound, trials,
           "analytic variance " + format_double(variance)});
    }
  }
  return results;
}

struct SuiteEntry {
  const char* name;
  std::vector<PropertyResult> (*fn)(RngSeed, double);
};

constexpr SuiteEntry kSuites[] = {
    {"jl", suite_jl},
    {"sensitivity", suite_sensitivity},
    {"row-norm-tail", suite_row_norm_tail},
    {"coordinate-tail", suite_coordinate_tail},
    {"unbiased", suite_unbiased},
    {"variance", suite_variance},
    {"chebyshev", suite_chebyshev},
};

}  // namespace

std::vector<std::string> verify_suite_names() {
  std::vector<std::string> names;
  for (const SuiteEntry& s : kSuites) {
    names.emplace_back(s.name);
  }
  names.emplace_back("all");
  return names;
}

VerifyReport run_verify(VerifyConfig cfg) {
  cfg.timestamp = resolve_timestamp(cfg.timestamp);
  if (cfg.trials_scale <= 0.0) {
    throw std::invalid_argument("verify: --trials scale must be positive");
  }

  const RngSeed root{cfg.seed, 0};
  VerifyReport report;
  bool found = false;
  for (std::size_t i = 0; i < std::size(kSuites); ++i) {
    if (cfg.suite != "all" && cfg.suite != kSuites[i].name) {
      continue;
    }
    found = true;
    auto results = kSuites[i].fn(derive_stream(root, i), cfg.trials_scale);
    report.results.insert(report.results.end(), results.begin(), results.end());
  }
  if (!found) {
    std::string names;
    for (const auto& n : verify_suite_names()) {
      names += names.empty() ? n : ", " + n;
    }
    throw std::invalid_argument("verify: unknown suite '" + cfg.suite +
                                "' (available: " + names + ")");
  }

  report.all_pass = true;
  for (const PropertyResult& r : report.results) {
    report.all_pass = report.all_pass && r.pass;
    std::printf("[%s] %-32s observed=%-12s bound=%-12s (%zu trials) %s\n",
                r.pass ? "PASS" : "FAIL", r.name.c_str(),
                format_double(r.observed).c_str(),
                format_double(r.bound).c_str(), r.trials, r.detail.c_str());
  }

  RunManifest m;
  m.timestamp = cfg.timestamp;
  m.seed = cfg.seed;
  m.mode = "verify";
  std::ostringstream cmd;
  cmd << "jldp verify --suite " << cfg.suite << " --trials "
      << format_double(cfg.trials_scale) << " --seed " << cfg.seed
      << " --timestamp " << cfg.timestamp << " --out " << quote(cfg.out);
  m.command = cmd.str();
  const auto manifest_path = with_suffix(cfg.out, ".manifest.json");
  write_manifest(m, manifest_path);

  ordered_json j;
  j["experiment"] = "verify";
  j["config"] = {{"suite", cfg.suite},
                 {"trials_scale", cfg.trials_scale},
                 {"seed", cfg.seed}};
  j["results"] = ordered_json::array();
  for (const PropertyResult& r : report.results) {
    j["results"].push_back({{"name", r.name},
                            {"pass", r.pass},
                            {"observed", r.observed},
                            {"bound", r.bound},
                            {"trials", r.trials},
                            {"detail", r.detail}});
  }
  j["all_pass"] = report.all_pass;
  j["manifest"] = manifest_path.filename().string();
  write_report_json(j, with_suffix(cfg.out, ".report.json"));

  return report;
}

}  // namespace jldp::experiments
