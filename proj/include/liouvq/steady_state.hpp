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

#include <vector>

#include "liouvq/model.hpp"

namespace liouvq {

/// Steady-state covariance and the physical observables read off from it.
struct SteadyState {
  ComplexMatrix omega;                  // 2L x 2L solution of the Lyapunov equation
  ComplexMatrix obs;                    // -omega^t
  std::vector<double> occupations;      // <n_i>
  ComplexMatrix pairings;               // <alpha_i alpha_j>, L x L
  std::vector<double> magnetization_z;  // 2 <n_i> - 1
  double residual = 0.0;                // scaled max-abs Lyapunov residual
};

/// Right-hand side of the steady-state Lyapunov equation:
/// blockdiag(lambda_plus, lambda_minus).
ComplexMatrix build_rhs(const QuadraticLindbladSpec& spec);

/// Solve for the covariance and extract occupations, pairings and local z
/// magnetization. Throws MarginalSpectrum when the spectrum touches the
/// imaginary axis.
SteadyState observables(const QuadraticLindbladSpec& spec);

}  // namespace liouvq
