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

#include "liouvq/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numeric>

#include "liouvq/eigen_solver.hpp"
#include "liouvq/structure.hpp"

namespace liouvq {

namespace {

constexpr double kPairWindow = 1e-6;

}  // namespace

std::vector<std::pair<int, int>> pair_conjugates(
    const std::vector<Complex>& values, bool* ok) {
  const std::size_t n = values.size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (values[a].real() != values[b].real())
      return values[a].real() < values[b].real();
    if (values[a].imag() != values[b].imag())
      return values[a].imag() < values[b].imag();
    return a < b;
  });

  std::vector<bool> used(n, false);
  std::vector<std::pair<int, int>> pairs;
  bool all_matched = true;

  for (std::size_t idx : order) {
    if (used[idx]) continue;
    used[idx] = true;
    const Complex target = std::conj(values[idx]);
    int best = -1;
    double best_dist = 0.0;
    for (std::size_t j : order) {
      if (used[j]) continue;
      const double d = std::abs(values[j] - target);
      if (best < 0 || d < best_dist) {
        best = int(j);
        best_dist = d;
      }
    }
    if (best >= 0 && best_dist <= kPairWindow) {
      used[std::size_t(best)] = true;
      pairs.emplace_back(int(idx), best);
    } else if (std::abs(values[idx].imag()) <= kPairWindow) {
      // A real mode of odd multiplicity is its own conjugate partner.
      pairs.emplace_back(int(idx), int(idx));
    } else {
      pairs.emplace_back(int(idx), -1);
      all_matched = false;
    }
  }
  if (ok != nullptr) *ok = all_matched;
  return pairs;
}

double relaxation_gap(const std::vector<Complex>& lambda_p) {
  if (lambda_p.empty()) return 0.0;
  double slowest = std::numeric_limits<double>::infinity();
  for (const Complex& v : lambda_p)
    slowest = std::min(slowest, -2.0 * v.real());
  return std::max(0.0, slowest);
}

double relaxation_gap(const SpectrumResult& result) {
  return relaxation_gap(result.lambda_p);
}

SpectrumResult rapidities(const QuadraticLindbladSpec& spec) {
  validate_spec(spec);
  const ComplexMatrix p = build_p(spec);
  EigenDecomposition eig = eigen_general(p);

  SpectrumResult out;
  out.lambda_p = std::move(eig.values);
  out.right_vectors = std::move(eig.vectors);
  out.residual = eig.max_relative_residual;
  out.pairs = pair_conjugates(out.lambda_p, &out.pairing_ok);
  out.rapidities.resize(out.lambda_p.size());
  for (std::size_t i = 0; i < out.lambda_p.size(); ++i)
    out.rapidities[i] = 2.0 * out.lambda_p[i];
  out.gap = relaxation_gap(out.lambda_p);
  return out;
}

std::vector<Complex> normal_mode_values(const QuadraticLindbladSpec& spec) {
  validate_spec(spec);
  return eigenvalues(build_p(spec));
}

std::vector<Complex> rapidity_values(const QuadraticLindbladSpec& spec) {
  std::vector<Complex> vals = normal_mode_values(spec);
  for (Complex& v : vals) v *= 2.0;
  return vals;
}

PowerLawFit fit_power_law(const std::vector<GapScanRow>& rows) {
  PowerLawFit fit;
  std::vector<double> xs, ys;
  for (const GapScanRow& r : rows) {
    if (!r.ok || r.gap <= 0.0) continue;
    xs.push_back(std::log(double(r.num_sites)));
    ys.push_back(std::log(r.gap));
  }
  fit.points = xs.size();
  if (xs.size() < 2) return fit;

  const double n = double(xs.size());
  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0, syy = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sx += xs[i];
    sy += ys[i];
    sxx += xs[i] * xs[i];
    sxy += xs[i] * ys[i];
    syy += ys[i] * ys[i];
  }
  const double denom = n * sxx - sx * sx;
  if (denom == 0.0) return fit;
  fit.slope = (n * sxy - sx * sy) / denom;
  fit.intercept = (sy - fit.slope * sx) / n;
  const double ss_tot = syy - sy * sy / n;
  double ss_res = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double e = ys[i] - (fit.slope * xs[i] + fit.intercept);
    ss_res += e * e;
  }
  fit.r2 = ss_tot > 0.0 ? 1.0 - ss_res / ss_tot : 1.0;
  fit.valid = true;
  return fit;
}

GapScanResult gap_scan(const XYChainParams& tmpl,
                       const std::vector<std::size_t>& lengths) {
  GapScanResult result;
  result.rows.resize(lengths.size());

  const std::int64_t count = std::int64_t(lengths.size());
#pragma omp parallel for schedule(dynamic) if (count > 1)
  for (std::int64_t i = 0; i < count; ++i) {
    GapScanRow& row = result.rows[std::size_t(i)];
    row.num_sites = lengths[std::size_t(i)];
    try {
      XYChainParams p = tmpl;
      p.num_sites = row.num_sites;
      row.gap = relaxation_gap(normal_mode_values(xy_chain_spec(p)));
      row.ok = true;
    } catch (const std::exception& e) {
      row.ok = false;
      row.error = e.what();
    }
  }

  result.fit = fit_power_law(result.rows);
  return result;
}

}  // namespace liouvq
