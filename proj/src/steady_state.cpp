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

#include "liouvq/steady_state.hpp"

#include <algorithm>

#include "liouvq/lyapunov.hpp"
#include "liouvq/structure.hpp"

namespace liouvq {

ComplexMatrix build_rhs(const QuadraticLindbladSpec& spec) {
  validate_spec(spec);
  const std::size_t n = spec.num_sites;
  ComplexMatrix rhs(2 * n, 2 * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      rhs(i, j) = spec.lambda_plus(i, j);
      rhs(n + i, n + j) = spec.lambda_minus(i, j);
    }
  return rhs;
}

SteadyState observables(const QuadraticLindbladSpec& spec) {
  validate_spec(spec);
  const std::size_t n = spec.num_sites;
  const ComplexMatrix p = build_p(spec);
  const ComplexMatrix rhs = build_rhs(spec);

  SteadyState out;
  out.omega = solve_lyapunov(p, rhs);
  const double scale = std::max(p.max_abs(), rhs.max_abs());
  const double raw = lyapunov_residual(p, out.omega, rhs);
  out.residual = scale > 0.0 ? raw / scale : raw;

  out.obs = (-1.0) * out.omega.transpose();

  out.occupations.resize(n);
  out.magnetization_z.resize(n);
  out.pairings = ComplexMatrix(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    out.occupations[i] = out.obs(i, i).real();
    out.magnetization_z[i] = 2.0 * out.occupations[i] - 1.0;
    for (std::size_t j = 0; j < n; ++j) out.pairings(i, j) = out.obs(n + i, j);
  }
  return out;
}

}  // namespace liouvq
