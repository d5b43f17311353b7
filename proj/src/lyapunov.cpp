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

#include "liouvq/lyapunov.hpp"

#include <cmath>
#include <sstream>

#include "liouvq/eigen_solver.hpp"
#include "liouvq/kernels.hpp"
#include "liouvq/lu.hpp"

namespace liouvq {

namespace {

constexpr double kMarginTol = 1e-12;

void require_square_same(const ComplexMatrix& a, const ComplexMatrix& c) {
  if (a.rows() != a.cols() || c.rows() != c.cols() || a.rows() != c.rows())
    throw Error(ErrorCode::DimensionMismatch,
                "lyapunov: A and C must be square of equal size");
}

}  // namespace

ComplexMatrix solve_lyapunov(const ComplexMatrix& a, const ComplexMatrix& c) {
  require_square_same(a, c);
  const std::size_t n = a.rows();
  if (n == 0) return ComplexMatrix(0, 0);

  SchurDecomposition s = schur_decompose(a);

  for (std::size_t i = 0; i < n; ++i) {
    if (s.t(i, i).real() > -kMarginTol) {
      std::ostringstream msg;
      msg << "eigenvalue " << i << " has real part " << s.t(i, i).real()
          << " >= -1e-12; steady state not unique/finite";
      throw Error(ErrorCode::MarginalSpectrum, msg.str());
    }
  }

  // T Y + Y T^H = U^H C U, solved column by column from the right.
  ComplexMatrix rhs = s.u.adjoint() * c * s.u;
  ComplexMatrix y(n, n);
  const double scale = std::max(1.0, s.t.max_abs());

  for (std::size_t k = n; k-- > 0;) {
    // Back-substitution for column k: (T + conj(T_kk) I) y_k = rhs_k.
    const Complex shift = std::conj(s.t(k, k));
    for (std::size_t i = n; i-- > 0;) {
      Complex sum = rhs(i, k);
      for (std::size_t j = i + 1; j < n; ++j) sum -= s.t(i, j) * y(j, k);
      const Complex d = s.t(i, i) + shift;
      if (std::abs(d) < kMarginTol * scale) {
        std::ostringstream msg;
        msg << "divisor lambda_" << i << " + conj(lambda_" << k
            << ") = " << std::abs(d) << " below threshold";
        throw Error(ErrorCode::MarginalSpectrum, msg.str());
      }
      y(i, k) = sum / d;
    }
    // Fold column k into the remaining right-hand sides.
    for (std::size_t kk = 0; kk < k; ++kk) {
      const Complex f = std::conj(s.t(kk, k));
      if (f == Complex{}) continue;
      for (std::size_t i = 0; i < n; ++i) rhs(i, kk) -= f * y(i, k);
    }
  }

  return s.u * y * s.u.adjoint();
}

ComplexMatrix solve_lyapunov_kron(const ComplexMatrix& a,
                                  const ComplexMatrix& c) {
  require_square_same(a, c);
  const std::size_t n = a.rows();
  if (n > 64)
    throw Error(ErrorCode::TooLarge,
                "vectorized lyapunov solve guarded to n <= 64");
  if (n == 0) return ComplexMatrix(0, 0);

  // Column-stacking: vec(A X) = (I (x) A) vec X, vec(X A^H) = (conj A (x) I) vec X.
  const ComplexMatrix eye = ComplexMatrix::identity(n);
  ComplexMatrix k = kernels::kron(eye, a);
  k += kernels::kron(a.conjugate(), eye);

  std::vector<Complex> rhs(n * n);
  for (std::size_t col = 0; col < n; ++col)
    for (std::size_t row = 0; row < n; ++row)
      rhs[col * n + row] = c(row, col);

  LuDecomposition f = lu_factor(std::move(k));
  if (f.singular ||
      (f.max_pivot > 0.0 && f.min_pivot < 1e-14 * f.max_pivot))
    throw Error(ErrorCode::Singular,
                "vectorized lyapunov operator is (near-)singular");
  std::vector<Complex> x = lu_solve(f, std::move(rhs));

  ComplexMatrix out(n, n);
  for (std::size_t col = 0; col < n; ++col)
    for (std::size_t row = 0; row < n; ++row)
      out(row, col) = x[col * n + row];
  return out;
}

double lyapunov_residual(const ComplexMatrix& a, const ComplexMatrix& x,
                         const ComplexMatrix& c) {
  ComplexMatrix r = a * x + x * a.adjoint() - c;
  return r.max_abs();
}

}  // namespace liouvq
