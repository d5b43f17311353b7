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

#include <algorithm>
#include <random>
#include <vector>

#include "liouvq/model.hpp"

namespace liouvq::testing {

inline ComplexMatrix random_complex(std::mt19937_64& rng, std::size_t n,
                                    double scale = 1.0) {
  std::normal_distribution<double> d(0.0, scale);
  ComplexMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = Complex(d(rng), d(rng));
  return m;
}

inline ComplexMatrix random_hermitian(std::mt19937_64& rng, std::size_t n) {
  ComplexMatrix a = random_complex(rng, n);
  ComplexMatrix h(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      h(i, j) = 0.5 * (a(i, j) + std::conj(a(j, i)));
  return h;
}

inline ComplexMatrix random_antisymmetric(std::mt19937_64& rng, std::size_t n) {
  ComplexMatrix a = random_complex(rng, n);
  ComplexMatrix g(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) g(i, j) = 0.5 * (a(i, j) - a(j, i));
  return g;
}

// Symmetric positive semidefinite with O(scale) entries: B^t B.
inline RealMatrix random_psd(std::mt19937_64& rng, std::size_t n,
                             double scale = 0.5) {
  std::normal_distribution<double> d(0.0, scale);
  RealMatrix b(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) b(i, j) = d(rng);
  RealMatrix out(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      double s = 0.0;
      for (std::size_t k = 0; k < n; ++k) s += b(k, i) * b(k, j);
      out(i, j) = s / double(n);
    }
  return out;
}

inline QuadraticLindbladSpec random_spec(std::mt19937_64& rng, std::size_t n) {
  QuadraticLindbladSpec spec;
  spec.num_sites = n;
  spec.h = random_hermitian(rng, n);
  spec.g = random_antisymmetric(rng, n);
  spec.lambda_plus = random_psd(rng, n);
  spec.lambda_minus = random_psd(rng, n);
  return spec;
}

inline XYChainParams random_xy(std::mt19937_64& rng, std::size_t n,
                               bool zero_field = false) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  XYChainParams p;
  p.num_sites = n;
  p.coupling = 0.5 + u(rng);
  p.anisotropy = u(rng);
  p.field = zero_field ? 0.0 : 0.5 * u(rng);
  p.inject_1 = u(rng);
  p.extract_1 = u(rng);
  p.inject_l = u(rng);
  p.extract_l = u(rng);
  return p;
}

// Greedy minimal matching distance between complex multisets.
inline double multiset_distance(const std::vector<Complex>& a,
                                const std::vector<Complex>& b) {
  if (a.size() != b.size()) return std::numeric_limits<double>::infinity();
  std::vector<bool> used(b.size(), false);
  double worst = 0.0;
  for (const Complex& x : a) {
    int best = -1;
    double best_d = 0.0;
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (used[j]) continue;
      const double d = std::abs(b[j] - x);
      if (best < 0 || d < best_d) {
        best = int(j);
        best_d = d;
      }
    }
    used[std::size_t(best)] = true;
    worst = std::max(worst, best_d);
  }
  return worst;
}

// Distance from each element of a to its nearest member of b.
inline double membership_distance(const std::vector<Complex>& a,
                                  const std::vector<Complex>& b) {
  double worst = 0.0;
  for (const Complex& x : a) {
    double best = std::numeric_limits<double>::infinity();
    for (const Complex& y : b) best = std::min(best, std::abs(y - x));
    worst = std::max(worst, best);
  }
  return worst;
}

}  // namespace liouvq::testing
