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

#include "liouvq/matrix.hpp"

namespace liouvq {

/// Solve A X + X A^H = C by Schur reduction of A and triangular
/// back-substitution. O(n^3). Throws MarginalSpectrum when A has an
/// eigenvalue with real part above -1e-12, or when a divisor
/// lambda_i + conj(lambda_k) collapses.
ComplexMatrix solve_lyapunov(const ComplexMatrix& a, const ComplexMatrix& c);

/// Independent oracle: solve the same equation as one dense linear system in
/// the vectorized unknown. Dense (n^2)x(n^2); guarded to n <= 64.
/// Throws Singular on marginal spectra and TooLarge past the guard.
ComplexMatrix solve_lyapunov_kron(const ComplexMatrix& a,
                                  const ComplexMatrix& c);

/// max-abs residual ||A X + X A^H - C||_max.
double lyapunov_residual(const ComplexMatrix& a, const ComplexMatrix& x,
                         const ComplexMatrix& c);

}  // namespace liouvq
