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

// Full-scale acceptance suite. Each criterion prints one PASS/FAIL line and
// the process exits non-zero if any fail. Usage:
//
//   jldp_acceptance <path-to-jldp-cli> <scratch-dir>
//
// The CLI path is needed by the reproducibility criterion, which re-runs
// commands from their manifests and byte-compares every output file.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <string>
#include <vector>

#include "jldp/clustering.hpp"
#include "jldp/datagen.hpp"
#include "jldp/diagnostics.hpp"
#include "jldp/experiments.hpp"
#include "jldp/io_formats.hpp"
#include "jldp/kernels.hpp"
#include "jldp/mechanism.hpp"
#include "jldp/noise.hpp"
#include "jldp/projection.hpp"
#include "jldp/recovery.hpp"
#include "jldp/rng.hpp"

using namespace jldp;
namespace fs = std::filesystem;

namespace {

int g_failures = 0;

void report(int criterion, const std::string& name, bool pass,
            const std::string& detail) {
  std::printf("[%s] criterion %2d: %-28s %s\n", pass ? "PASS" : "FAIL",
              criterion, name.c_str(), detail.c_str());
  std::fflush(stdout);
  if (!pass) {
    ++g_failures;
  }
}

double elapsed_seconds(const std::chrono::steady_clock::time_point& start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
      .count();
}

double mean_of(const std::vector<double>& xs) {
  double sum = 0.0;
  for (double x : xs) {
    sum += x;
  }
  return sum / static_cast<double>(xs.size());
}

double variance_of(const std::vector<double>& xs) {
  const double m = mean_of(xs);
  double sq = 0.0;
  for (double x : xs) {
    sq += (x - m) * (x - m);
  }
  return sq / static_cast<double>(xs.size() - 1);
}

std::string fmt(double v) { return format_double(v); }

// Criterion 1: the projection preserves squared distances in expectation.
// 10 random pairs in d=50, k=10; the Monte-Carlo mean of ||xP - yP||^2 over
// 1e5 projections must be within 1% relative of ||x - y||^2. Under 1 min.
void criterion1() {
  const auto start = std::chrono::steady_clock::now();
  constexpr std::size_t d = 50;
  constexpr std::size_t k = 10;
  constexpr std::size_t n_pairs = 10;
  constexpr std::size_t trials = 100000;

  const RngSeed root{101, 0};
  Rng setup(derive_stream(root, 0));
  std::vector<std::vector<double>> diffs(n_pairs, std::vector<double>(d));
  std::vector<double> true_d2(n_pairs, 0.0);
  for (std::size_t p = 0; p < n_pairs; ++p) {
    const double spread = 0.5 + 2.5 * setup.next_open01();
    for (std::size_t j = 0; j < d; ++j) {
      diffs[p][j] = setup.next_gaussian() * spread;
      true_d2[p] += diffs[p][j] * diffs[p][j];
    }
  }

  const RngSeed trial_root = derive_stream(root, 1);
  std::vector<double> slots(trials * n_pairs);
  kernels::parallel_trials(trials, [&](std::size_t t) {
    const ProjectionMatrix p = sample_projection(d, k, derive_stream(trial_root, t));
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
  for (std::size_t pair = 0; pair < n_pairs; ++pair) {
    double sum = 0.0;
    for (std::size_t t = 0; t < trials; ++t) {
      sum += slots[t * n_pairs + pair];
    }
    const double mc_mean = sum / static_cast<double>(trials);
    max_rel = std::max(max_rel,
                       std::fabs(mc_mean - true_d2[pair]) / true_d2[pair]);
  }
  const double secs = elapsed_seconds(start);
  report(1, "projection unbiasedness",
         max_rel <= 0.01 && secs < 60.0,
         "max relative error " + fmt(max_rel) + " (tol 0.01), " + fmt(secs) +
             "s (limit 60s)");
}

// Criterion 2: single-element sensitivity inequality, 1e4 random trials with
// |changed element| <= 1 and Gaussian A: zero violations of
// ||XA - X'A||_1 <= sqrt(k) max_i ||A_i||_2.
void criterion2() {
  constexpr std::size_t n = 4;
  constexpr std::size_t d = 8;
  constexpr std::size_t k = 6;
  constexpr std::size_t trials = 10000;

  const RngSeed root{102, 0};
  std::vector<char> violated(trials, 0);
  kernels::parallel_trials(trials, [&](std::size_t t) {
    Rng gen(derive_stream(root, t));
    std::vector<double> xv(n * d);
    for (double& v : xv) {
      v = gen.next_gaussian();
    }
    std::vector<double> xv2 = xv;
    xv2[gen.next_u64() % (n * d)] += 2.0 * gen.next_open01() - 1.0;

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
  });

  std::size_t violations = 0;
  for (char v : violated) {
    violations += v;
  }
  report(2, "sensitivity inequality", violations == 0,
         std::to_string(violations) + " violations in 10000 trials");
}

// Criterion 3: max-row-norm tail bound at d=50, k=10 over 1e5 samples:
// the frequency of max_i ||P_i|| > 1 + sqrt(2x/k) stays below d exp(-x).
void criterion3() {
  constexpr std::size_t d = 50;
  constexpr std::size_t k = 10;
  constexpr std::size_t trials = 100000;

  const RngSeed root{103, 0};
  std::vector<double> norms(trials);
  kernels::parallel_trials(trials, [&](std::size_t t) {
    norms[t] = max_row_norm2(sample_projection(d, k, derive_stream(root, t)));
  });

  bool pass = true;
  std::string detail;
  for (const double x : {3.0, 5.0}) {
    const double threshold = 1.0 + std::sqrt(2.0 * x / static_cast<double>(k));
    std::size_t exceed = 0;
    for (double norm : norms) {
      exceed += norm > threshold ? 1 : 0;
    }
    const double freq = static_cast<double>(exceed) / trials;
    const double bound = d * std::exp(-x);
    pass = pass && freq <= bound;
    detail += "x=" + fmt(x) + ": " + fmt(freq) + " <= " + fmt(bound) + "  ";
  }
  report(3, "row-norm tail bound", pass, detail);
}

// Criterion 4: calibration exactness.
void criterion4() {
  const PrivacyParams a = calibrate_element_wise(4, 4.0, 10);
  const bool b_exact = a.b == 1.0;

  const PrivacyParams b = calibrate_element_wise(20, 4.0, 100);
  const double expected_fb = 4.5399929762484851536e-3;  // 100 exp(-10)
  const bool fb_close =
      std::fabs(b.failure_bound - expected_fb) <= 1e-12 * expected_fb;

  const PrivacyParams c = calibrate_row_wise(2, 4.0, 1.0, 1.0);
  const bool row_exact = c.failure_bound == 1.0;

  report(4, "calibration exactness", b_exact && fb_close && row_exact,
         "element b=" + fmt(a.b) + " (want exactly 1), element fb=" +
             fmt(b.failure_bound) + " (want 100e^-10 at 1e-12 rel), row fb=" +
             fmt(c.failure_bound) + " (want exactly 1)");
}

// Criterion 5: the distance estimator is unbiased. Part (a): 20 random
// pairs, 1e5 releases each, Monte-Carlo mean within 3 standard errors of
// the true squared distance. Part (b): the full 1000 pairs x 1000 repeats
// experiment at eps=4 must have |mean difference| <= 0.05 for both modes.
// Under 10 min total.
void criterion5(const fs::path& scratch) {
  const auto start = std::chrono::steady_clock::now();

  constexpr std::size_t n_pairs = 20;
  constexpr std::size_t trials = 100000;
  const RngSeed root{105, 0};
  Rng setup(derive_stream(root, 0));
  double max_z = 0.0;
  std::vector<double> est(trials);
  for (std::size_t pair = 0; pair < n_pairs; ++pair) {
    const std::size_t d = 2 + setup.next_u64() % 19;
    const double spread = 0.5 + 4.5 * setup.next_open01();
    std::vector<double> values(2 * d);
    for (double& v : values) {
      v = setup.next_gaussian() * spread;
    }
    const DataMatrix two(2, d, values);
    const double true_d2 =
        kernels::squared_distance(two.row(0), two.row(1));
    const PrivacyParams params = calibrate_element_wise(4, 4.0, d);

    const RngSeed pair_root = derive_stream(root, 1 + pair);
    kernels::parallel_trials(trials, [&](std::size_t t) {
      const ReleasedMatrix z = release(two, params, derive_stream(pair_root, t));
      est[t] = recover_distance(z.z.row(0), z.z.row(1), params.k,
                                params.sigma2).estimate;
    });
    const double mc_mean = mean_of(est);
    const double se = std::sqrt(variance_of(est) / trials);
    max_z = std::max(max_z, std::fabs(mc_mean - true_d2) / se);
  }

  // (b) headline replication through the same code path as the CLI.
  double mean_element = 0.0;
  double mean_row = 0.0;
  {
    experiments::DistanceRecoveryConfig cfg;
    cfg.out = scratch / "dr_element";
    cfg.mode = PrivacyMode::kElementWise;
    cfg.seed = 1050;
    cfg.timestamp = "2026-01-01T00:00:00Z";
    mean_element = experiments::run_distance_recovery(cfg).mean_difference;
    cfg.out = scratch / "dr_row";
    cfg.mode = PrivacyMode::kRowWise;
    cfg.seed = 1051;
    mean_row = experiments::run_distance_recovery(cfg).mean_difference;
  }

  const double secs = elapsed_seconds(start);
  const bool pass = max_z <= 3.0 && std::fabs(mean_element) <= 0.05 &&
                    std::fabs(mean_row) <= 0.05 && secs < 600.0;
  report(5, "estimator unbiasedness", pass,
         "max |mean-true|/SE " + fmt(max_z) + " (tol 3); 1000x1000 mean " +
             "diff element " + fmt(mean_element) + ", row " + fmt(mean_row) +
             " (tol 0.05); " + fmt(secs) + "s (limit 600s)");
}

// Criterion 6: variance decomposition at k=10, sigma2=2, dist2=16 over 1e6
// draws: projection term within 5% of 51.2, noise term within 5% of 560,
// total within 3% of the oracle-resolved closed form; the discrepancy
// against the uncorrected closed form is printed.
void criterion6() {
  constexpr std::size_t d = 10;
  constexpr std::size_t k = 10;
  constexpr double sigma2 = 2.0;
  constexpr double dist2 = 16.0;
  constexpr std::size_t trials = 1000000;

  std::vector<double> values(2 * d, 0.0);
  values[0] = std::sqrt(dist2);
  const DataMatrix two(2, d, values);
  PrivacyParams params;
  params.mode = PrivacyMode::kElementWise;
  params.k = k;
  params.sigma2 = sigma2;
  params.b = std::sqrt(sigma2 / 2.0);
  params.epsilon = 1.0;
  params.c = params.b;
  params.failure_bound = 1.0;
  params.vacuous_bound = true;

  const RngSeed root{106, 0};
  std::vector<double> z1(trials);
  std::vector<double> z2(trials);
  std::vector<double> z3(trials);
  std::vector<double> dd(trials);
  kernels::parallel_trials(trials, [&](std::size_t t) {
    const auto tr =
        diagnostics::release_with_transcript(two, params, derive_stream(root, t));
    const auto r0 = tr.released.z.row(0);
    const auto r1 = tr.released.z.row(1);
    const auto n0 = tr.noise.values.row(0);
    const auto n1 = tr.noise.values.row(1);
    double proj_sq = 0.0;
    double noise_sq = 0.0;
    double cross = 0.0;
    for (std::size_t i = 0; i < k; ++i) {
      const double pd = (r0[i] - n0[i]) - (r1[i] - n1[i]);
      const double nd = n0[i] - n1[i];
      proj_sq += pd * pd;
      noise_sq += nd * nd;
      cross += pd * nd;
    }
    z1[t] = proj_sq;
    z2[t] = noise_sq;
    z3[t] = 2.0 * cross;
    dd[t] = proj_sq + noise_sq + 2.0 * cross - 2.0 * k * sigma2;
  });

  const VarianceReport analytic = analytic_variance(dist2, k, sigma2);
  const double var1 = variance_of(z1);
  const double var2 = variance_of(z2);
  const double var3 = variance_of(z3);
  const double total = variance_of(dd);
  const bool pass =
      std::fabs(var1 - analytic.var_projection) <= 0.05 * analytic.var_projection &&
      std::fabs(var2 - analytic.var_noise) <= 0.05 * analytic.var_noise &&
      std::fabs(total - analytic.total) <= 0.03 * analytic.total;
  report(6, "variance decomposition", pass,
         "MC vars " + fmt(var1) + "/" + fmt(var2) + "/" + fmt(var3) +
             " vs closed form 51.2/560/256; MC total " + fmt(total) + " vs " +
             fmt(analytic.total) + "; uncorrected closed form gives " +
             fmt(analytic.uncorrected_total) + " (discrepancy " +
             fmt(analytic.total - analytic.uncorrected_total) + ")");
}

// Criterion 7: Chebyshev bound: empirical exceedance frequencies stay below
// min(1, Var/lambda^2) for lambda in {5,10,20} sigma2 across 3
// configurations, 1e5 draws each.
void criterion7() {
  struct Config {
    std::size_t k;
    double sigma2;
    double dist2;
    std::size_t d;
  };
  const std::vector<Config> configs = {
      {10, 2.0, 16.0, 12}, {2, 1.0, 4.0, 4}, {5, 0.5, 9.0, 8}};
  constexpr std::size_t trials = 100000;

  const RngSeed root{107, 0};
  bool pass = true;
  std::string detail;
  std::vector<double> est(trials);
  for (std::size_t ci = 0; ci < configs.size(); ++ci) {
    const Config& c = configs[ci];
    std::vector<double> values(2 * c.d, 0.0);
    values[0] = std::sqrt(c.dist2);
    const DataMatrix two(2, c.d, values);
    PrivacyParams params;
    params.mode = PrivacyMode::kElementWise;
    params.k = c.k;
    params.sigma2 = c.sigma2;
    params.b = std::sqrt(c.sigma2 / 2.0);
    params.epsilon = 1.0;
    params.c = params.b;
    params.failure_bound = 1.0;
    params.vacuous_bound = true;

    const RngSeed config_root = derive_stream(root, ci);
    kernels::parallel_trials(trials, [&](std::size_t t) {
      const ReleasedMatrix z = release(two, params, derive_stream(config_root, t));
      est[t] = recover_distance(z.z.row(0), z.z.row(1), c.k, c.sigma2).estimate;
    });

    const double variance = analytic_variance(c.dist2, c.k, c.sigma2).total;
    for (const double mult : {5.0, 10.0, 20.0}) {
      const double lambda = mult * c.sigma2;
      std::size_t exceed = 0;
      for (double e : est) {
        exceed += std::fabs(e - c.dist2) > lambda ? 1 : 0;
      }
      const double freq = static_cast<double>(exceed) / trials;
      const double bound = chebyshev_error_bound(variance, lambda);
      pass = pass && freq <= bound;
    }
    detail += "k=" + std::to_string(c.k) + " ok  ";
  }
  report(7, "chebyshev bound", pass, pass ? detail : "exceedance above bound");
}

// Criterion 8: the clustering-accuracy grid at paper scale. Non-private
// accuracy >= 0.97 everywhere; private accuracies within +-0.08 of the
// published point estimates. Under 5 min.
void criterion8(const fs::path& scratch) {
  const auto start = std::chrono::steady_clock::now();

  experiments::Table1Config cfg;
  cfg.seed = 108;
  cfg.timestamp = "2026-01-01T00:00:00Z";
  cfg.out = scratch / "table1";
  const experiments::Table1Report report_data = experiments::run_table1(cfg);

  const std::map<std::pair<std::size_t, std::string>, double> published = {
      {{3, "element"}, 0.9441},  {{10, "element"}, 0.9082},
      {{50, "element"}, 0.6954}, {{100, "element"}, 0.6927},
      {{3, "row"}, 0.9477},      {{10, "row"}, 0.909},
      {{50, "row"}, 0.6796},     {{100, "row"}, 0.6668}};

  bool pass = true;
  std::string detail;
  for (const auto& cell : report_data.cells) {
    if (cell.mode == "none") {
      if (cell.mean_accuracy < 0.97) {
        pass = false;
        detail += "none d=" + std::to_string(cell.d) + " " +
                  fmt(cell.mean_accuracy) + " < 0.97  ";
      }
      continue;
    }
    const double want = published.at({cell.d, cell.mode});
    if (std::fabs(cell.mean_accuracy - want) > 0.08) {
      pass = false;
      detail += cell.mode + " d=" + std::to_string(cell.d) + " " +
                fmt(cell.mean_accuracy) + " vs " + fmt(want) + "  ";
    }
  }
  const double secs = elapsed_seconds(start);
  if (secs >= 300.0) {
    pass = false;
  }
  report(8, "clustering-accuracy grid", pass,
         (detail.empty() ? "all 12 cells within tolerance" : detail) + ", " +
             fmt(secs) + "s (limit 300s)");
}

// Criterion 9: the std curve equals sqrt(1 + 2 b^2) to machine precision,
// element-wise values increase in k, and row-wise exceeds element-wise for
// k >= 4 at alpha=1, multiplier=1.
void criterion9(const fs::path& scratch) {
  experiments::StdCurveConfig cfg;
  cfg.timestamp = "2026-01-01T00:00:00Z";
  cfg.out = scratch / "curve";
  const experiments::StdCurveReport curve = experiments::run_std_curve(cfg);

  bool formula_ok = true;
  bool monotone_ok = true;
  bool ordering_ok = true;
  double prev_element = 0.0;
  std::map<std::size_t, double> element_std;
  for (const auto& pt : curve.points) {
    // b re-derived through an independent calibration call, then the curve
    // formula applied to it; both must match the emitted values exactly.
    const double calibrated_b =
        pt.mode == "element"
            ? calibrate_element_wise(pt.k, 4.0, 1).b
            : calibrate_row_wise(pt.k, 4.0, 1.0, 1.0).b;
    const double want = std::sqrt(1.0 + 2.0 * calibrated_b * calibrated_b);
    formula_ok = formula_ok && pt.b == calibrated_b && pt.std == want;
    if (pt.mode == "element") {
      monotone_ok = monotone_ok && pt.std > prev_element;
      prev_element = pt.std;
      element_std[pt.k] = pt.std;
    }
  }
  for (const auto& pt : curve.points) {
    if (pt.mode == "row" && pt.k >= 4) {
      ordering_ok = ordering_ok && pt.std > element_std.at(pt.k);
    }
  }
  report(9, "std curve", formula_ok && monotone_ok && ordering_ok,
         std::string("formula ") + (formula_ok ? "exact" : "WRONG") +
             ", element monotone " + (monotone_ok ? "yes" : "no") +
             ", row above element for k>=4 " + (ordering_ok ? "yes" : "no"));
}

// Criterion 10: every CLI command, re-run from the command stored in its
// manifest, reproduces every output file byte-identically.
struct CommandCase {
  std::string name;
  std::string args;  // appended after the binary path
};

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void criterion10(const std::string& cli, const fs::path& scratch) {
  const fs::path dir = scratch / "repro";
  fs::create_directories(dir);
  const std::string ts = " --timestamp 2026-01-01T00:00:00Z";
  const std::string data = (dir / "data.csv").string();

  const std::vector<CommandCase> cases = {
      {"generate", "generate --n-per-cluster 50 --d 4 --seed 1" + ts +
                       " --out '" + data + "'"},
      {"release", "release --in '" + data + "' --mode row --k 2 --seed 2" +
                      ts + " --out '" + (dir / "rel.csv").string() + "'"},
      {"table1", "table1 --grid 3:2 --seeds 2 --seed 3" + ts + " --out '" +
                     (dir / "t1").string() + "'"},
      {"distance-recovery", "distance-recovery --pairs 5 --repeats 10 --seed 4" +
                                ts + " --out '" + (dir / "dr").string() + "'"},
      {"std-curve", "std-curve --k-min 2 --k-max 5 --seed 5" + ts +
                        " --out '" + (dir / "sc").string() + "'"},
      {"verify", "verify --suite sensitivity --trials 0.05 --seed 6" + ts +
                     " --out '" + (dir / "v").string() + "'"},
  };

  bool pass = true;
  std::string detail;
  for (const CommandCase& c : cases) {
    const std::string first = "'" + cli + "' " + c.args + " >/dev/null 2>&1";
    if (std::system(first.c_str()) != 0) {
      pass = false;
      detail += c.name + ": first run failed  ";
      continue;
    }
    // Snapshot every file currently in the directory.
    std::map<fs::path, std::string> before;
    for (const auto& entry : fs::directory_iterator(dir)) {
      before[entry.path()] = slurp(entry.path());
    }
    // Find this command's manifest and re-run the stored command verbatim,
    // with the binary path substituted for the "jldp" prefix.
    fs::path found;
    for (const auto& entry : fs::directory_iterator(dir)) {
      const std::string name = entry.path().filename().string();
      if (name.ends_with(".manifest.json")) {
        const RunManifest m = read_manifest(entry.path());
        if (m.command.find("jldp " + c.name) == 0) {
          found = entry.path();
        }
      }
    }
    if (found.empty()) {
      pass = false;
      detail += c.name + ": manifest not found  ";
      continue;
    }
    const RunManifest m = read_manifest(found);
    std::string rerun = m.command;
    rerun.replace(0, 4, "'" + cli + "'");
    rerun += " >/dev/null 2>&1";
    if (std::system(rerun.c_str()) != 0) {
      pass = false;
      detail += c.name + ": rerun failed  ";
      continue;
    }
    for (const auto& [path, bytes] : before) {
      if (slurp(path) != bytes) {
        pass = false;
        detail += c.name + ": " + path.filename().string() + " differs  ";
      }
    }
  }
  report(10, "manifest reproducibility", pass,
         pass ? "all 6 commands byte-identical on rerun" : detail);
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 3) {
    std::fprintf(stderr, "usage: %s <jldp-cli-path> <scratch-dir>\n", argv[0]);
    return 2;
  }
  const std::string cli = argv[1];
  const fs::path scratch = argv[2];
  fs::create_directories(scratch);

  criterion1();
  criterion2();
  criterion3();
  criterion4();
  criterion5(scratch);
  criterion6();
  criterion7();
  criterion8(scratch);
  criterion9(scratch);
  criterion10(cli, scratch);

  if (g_failures > 0) {
    std::printf("%d criteria FAILED\n", g_failures);
    return 1;
  }
  std::printf("all 10 criteria passed\n");
  return 0;
}
