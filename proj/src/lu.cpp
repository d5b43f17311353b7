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

#include "liouvq/lu.hpp"

#include <cmath>
#include <cstdint>
#include <limits>
#include <utility>

namespace liouvq {

LuDecomposition lu_factor(ComplexMatrix a) {
  const std::size_t n = a.rows();
  if (a.cols() != n)
    throw Error(ErrorCode::DimensionMismatch, "lu_factor: matrix not square");

  LuDecomposition f;
  f.pivot.resize(n);
  f.min_pivot = std::numeric_limits<double>::infinity();

  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    double best = std::abs(a(k, k));
    for (std::size_t i = k + 1; i < n; ++i) {
      const double m = std::abs(a(i, k));
      if (m > best) {
        best = m;
        p = i;
      }
    }
    f.pivot[k] = p;
    if (p != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(p, j));
      f.parity = -f.parity;
    }
    f.min_pivot = std::min(f.min_pivot, best);
    f.max_pivot = std::max(f.max_pivot, best);
    if (best == 0.0) {
      f.singular = true;
      continue;
    }
    const Complex inv = Complex(1.0, 0.0) / a(k, k);
    const std::int64_t nn = std::int64_t(n);
#pragma omp parallel for schedule(static) if ((n - k) * (n - k) > (1u << 20))
    for (std::int64_t i = std::int64_t(k) + 1; i < nn; ++i) {
      const Complex m = a(std::size_t(i), k) * inv;
      a(std::size_t(i), k) = m;
      if (m == Complex{}) continue;
      const Complex* ak = a.row(k);
      Complex* ai = a.row(std::size_t(i));
      for (std::size_t j = k + 1; j < n; ++j) ai[j] -= m * ak[j];
    }
  }
  if (n == 0) f.min_pivot = 0.0;
  f.lu = std::move(a);
  return f;
}

std::vector<Complex> lu_solve(const LuDecomposition& f,
                              std::vector<Complex> b) {
  const std::size_t n = f.lu.rows();
  if (b.size() != n)
    throw Error(ErrorCode::DimensionMismatch, "lu_solve: rhs size mismatch");
  if (f.singular)
    throw Error(ErrorCode::Singular, "lu_solve: zero pivot in factorization");

  // The stored multiplier rows reflect all later interchanges, so the full
  // permutation must be applied to the right-hand side before substitution.
  for (std::size_t k = 0; k < n; ++k)
    if (f.pivot[k] != k) std::swap(b[k], b[f.pivot[k]]);
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = k + 1; i < n; ++i) b[i] -= f.lu(i, k) * b[k];
  for (std::size_t i = n; i-- > 0;) {
    Complex s = b[i];
    for (std::size_t j = i + 1; j < n; ++j) s -= f.lu(i, j) * b[j];
    b[i] = s / f.lu(i, i);
  }
  return b;
}

ComplexMatrix lu_solve(const LuDecomposition& f, ComplexMatrix b) {
  const std::size_t n = f.lu.rows();
  if (b.rows() != n)
    throw Error(ErrorCode::DimensionMismatch, "lu_solve: rhs rows mismatch");
  for (std::size_t c = 0; c < b.cols(); ++c) {
    std::vector<Complex> col(n);
    for (std::size_t i = 0; i < n; ++i) col[i] = b(i, c);
    col = lu_solve(f, std::move(col));
    for (std::size_t i = 0; i < n; ++i) b(i, c) = col[i];
  }
  return b;
}

Complex determinant(const ComplexMatrix& a) {
  LuDecomposition f = lu_factor(a);
  if (f.singular) return Complex{};
  Complex det(double(f.parity), 0.0);
  for (std::size_t i = 0; i < f.lu.rows(); ++i) det *= f.lu(i, i);
  return det;
}

}  // namespace liouvq
