// Copyright 2026 The liouvq Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "liouvq/model.hpp"

namespace liouvq {

/// Eigen-structure of the 2L x 2L normal-mode matrix. The spectrum is
/// closed under conjugation; rapidities are twice the eigenvalues.
struct SpectrumResult {
  std::vector<Complex> lambda_p;  // 2L eigenvalues
  /// Partition into conjugate groups: (i, j) with lambda_j ~ conj(lambda_i).
  /// Real modes of odd multiplicity are their own partner (j == i); j = -1
  /// marks a genuinely unmatched value (defective pathology).
  std::vector<std::pair<int, int>> pairs;
  bool pairing_ok = true;
  ComplexMatrix right_vectors;     // columns match lambda_p
  std::vector<Complex> rapidities; // 2 * lambda_p
  double gap = 0.0;
  double residual = 0.0;
};

/// Pair eigenvalues with their conjugates by greedy nearest match inside a
/// 1e-6 window; clusters are resolved in (Re, Im, index) order. Values whose
/// imaginary part fits in the window may self-pair.
std::vector<std::pair<int, int>> pair_conjugates(
    const std::vector<Complex>& values, bool* ok);

/// Slowest single-mode decay rate, min over modes of -Re(2 lambda).
/// Purely oscillatory modes give zero. Never negative.
double relaxation_gap(const std::vector<Complex>& lambda_p);
double relaxation_gap(const SpectrumResult& result);

/// Full eigen-decomposition of the normal-mode matrix of a validated spec.
SpectrumResult rapidities(const QuadraticLindbladSpec& spec);

/// Eigenvalues of the normal-mode matrix only (no vectors); the cheap path
/// for parameter scans.
std::vector<Complex> normal_mode_values(const QuadraticLindbladSpec& spec);

/// Twice the normal-mode eigenvalues.
std::vector<Complex> rapidity_values(const QuadraticLindbladSpec& spec);

struct GapScanRow {
  std::size_t num_sites = 0;
  double gap = 0.0;
  bool ok = false;
  std::string error;
};

struct PowerLawFit {
  bool valid = false;
  double slope = 0.0;
  double intercept = 0.0;
  double r2 = 0.0;
  std::size_t points = 0;
};

struct GapScanResult {
  std::vector<GapScanRow> rows;
  PowerLawFit fit;
};

/// Gap for each chain length, plus a log-log least-squares fit. Rows with
/// failures or non-positive gaps are marked and excluded from the fit; the
/// fit is flagged undefined with fewer than two usable rows.
GapScanResult gap_scan(const XYChainParams& tmpl,
                       const std::vector<std::size_t>& lengths);

PowerLawFit fit_power_law(const std::vector<GapScanRow>& rows);

}  // namespace liouvq
