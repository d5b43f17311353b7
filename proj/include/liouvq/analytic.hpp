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

#include <utility>
#include <vector>

#include "liouvq/model.hpp"
#include "liouvq/structure.hpp"

namespace liouvq {

enum class Parity { odd, even };

/// Parameters of the bordered 2-Toeplitz eigenproblem: alternating
/// off-diagonal entries d1, d2 and the two boundary rates.
struct SecularParams {
  std::size_t m = 1;  // L = 2m+1 (odd) or L = 2m (even)
  Parity parity = Parity::odd;
  Complex d1{};
  Complex d2{};
  double gamma_1 = 0.0;
  double gamma_l = 0.0;

  std::size_t matrix_size() const {
    return parity == Parity::odd ? 2 * m + 1 : 2 * m;
  }
};

/// d1/d2 and borders for the reduced matrix of one sign of an XY chain.
SecularParams secular_params(const XYChainParams& params, Sign sign);

/// The tridiagonal matrix the secular parameters describe, built explicitly.
ComplexMatrix secular_matrix(const SecularParams& p);

/// The characteristic determinant evaluated exactly as the odd/even closed
/// forms state it. Throws SingularTheta when |sin theta| <= 1e-12 and ZeroD2
/// in the even case when |d2| < 1e-14.
Complex secular_determinant(Complex theta, Complex lambda,
                            const SecularParams& p);

/// Both square-root branches of lambda^2 = d1^2 + d2^2 + 2 d1 d2 cos(theta).
/// First element is the principal branch (non-negative real part, ties
/// resolved toward non-negative imaginary part).
std::pair<Complex, Complex> lambda_from_theta(Complex theta, Complex d1,
                                              Complex d2);

struct SecularRoot {
  Complex theta{};
  Complex lambda{};
  int branch = +1;  // which square root of the theta relation matched
  double det_residual = 0.0;
  double charpoly_residual = 0.0;
};

/// All eigenvalues of the reduced matrix via the substitution z = e^{i theta}:
/// the secular equation becomes a polynomial in z, solved by a companion
/// eigenproblem; candidates are kept only when the characteristic polynomial
/// of the explicit matrix vanishes at them. Returns exactly L roots or
/// throws RootCountMismatch.
std::vector<SecularRoot> solve_secular(const SecularParams& p);

struct CharpolyEval {
  Complex det{};        // det(Q - lambda I)
  double relative = 0.0;  // |p_L| over the running magnitude of the recurrence
};

/// det(Q - lambda I) for tridiagonal Q by the three-term recurrence, with a
/// running-magnitude scale so the relative size of the result is meaningful.
CharpolyEval tridiag_charpoly_eval(const ComplexMatrix& q, Complex lambda);

/// Spectrum of one reduced matrix when an off-diagonal vanishes: the matrix
/// splits into 1x1 and 2x2 blocks with closed-form eigenvalues.
std::vector<Complex> block_spectrum(const SecularParams& p);

/// Union of both reduced-matrix spectra for an Ising chain (|gamma| = 1,
/// zero field): 2L values drawn from a size-independent set.
/// Throws NotIsing for other anisotropies.
std::vector<Complex> ising_spectrum(const XYChainParams& params);

/// The allowed-value set of the Ising closed form:
/// {+-iJ, -G/2, -G/4 +- sqrt(G^2 - 16 J^2)/4} for G in {Gamma_1, Gamma_L}.
std::vector<Complex> ising_allowed_set(double coupling, double gamma_1,
                                       double gamma_l);

/// Roots of a polynomial (coefficients in ascending powers) via the
/// companion-matrix eigenproblem. Leading/trailing negligible coefficients
/// are trimmed relative to the largest one.
std::vector<Complex> companion_roots(const std::vector<Complex>& coeffs);

}  // namespace liouvq
