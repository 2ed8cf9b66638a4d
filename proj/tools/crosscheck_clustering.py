# Copyright 2026 The jldp Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Independent cross-check of the clustering-utility grid.

Re-implements the release mechanism and the accuracy measurement from
scratch with numpy + scikit-learn, sharing no code with the C++ library.
Useful when auditing why the acceptance suite's clustering-grid check is
red on the small-k cells: this script lands on the same mean accuracies.

Usage: python3 tools/crosscheck_clustering.py [seeds]
"""

import sys

import numpy as np
from sklearn.cluster import KMeans
from sklearn.datasets import make_blobs


def accuracy(assignments, labels):
    m = (assignments == labels).mean()
    return max(m, 1.0 - m)


def laplace_scale(mode, k, eps, alpha=1.0, t_multiplier=1.0):
    if mode == "element":
        return 2.0 * np.sqrt(k) / eps
    t = t_multiplier * np.sqrt(2.0 * np.log(2.0 * k) * alpha / k)
    return k * t / eps


def run_cell(d, k, eps, mode, seeds):
    accs = []
    for s in range(seeds):
        rng = np.random.default_rng(10_000 + s)
        centers = np.zeros((2, d))
        centers[0, 0], centers[1, 0] = -2.0, 2.0
        x, y = make_blobs(n_samples=2000, n_features=d, centers=centers,
                          cluster_std=1.0, random_state=s)
        proj = rng.normal(0.0, np.sqrt(1.0 / k), size=(d, k))
        noise = rng.laplace(0.0, laplace_scale(mode, k, eps), size=(2000, k))
        z = x @ proj + noise
        km = KMeans(n_clusters=2, n_init=10, random_state=s).fit(z)
        accs.append(accuracy(km.labels_, y))
    return float(np.mean(accs)), float(np.std(accs))


def main():
    seeds = int(sys.argv[1]) if len(sys.argv) > 1 else 20
    print(f"{seeds} seeds per cell, eps=4")
    for d, k in [(3, 2), (10, 3), (50, 10), (100, 20)]:
        el_mean, el_std = run_cell(d, k, 4.0, "element", seeds)
        ro_mean, ro_std = run_cell(d, k, 4.0, "row", seeds)
        print(f"d={d:3d} k={k:2d}  element {el_mean:.4f} +- {el_std:.4f}   "
              f"row {ro_mean:.4f} +- {ro_std:.4f}")


if __name__ == "__main__":
    main()
