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

#include "liouvq/eigen_solver.hpp"

#include <cmath>
#include <cstdint>
#include <limits>
#include <string>

#include "liouvq/kernels.hpp"

namespace liouvq {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr double kSafeMin = std::numeric_limits<double>::min();

// Hermitian Householder reflector H = I - (2/||w||^2) w w^H sending the
// input segment x onto beta e_1. With beta = -e^{i arg(x_0)} ||x|| the
// inner product w^H x is real, which makes H x = beta e_1 exact and keeps
// H unitary and Hermitian (no left/right conjugation asymmetry).
struct Reflector {
  std::vector<Complex> w;
  double factor = 0.0;  // 2 / ||w||^2; zero means identity
  Complex beta{};
};

Reflector make_reflector(const Complex* x, std::size_t len) {
  Reflector r;
  r.w.assign(x, x + len);
  if (len == 0) return r;

  bool tail_zero = true;
  for (std::size_t i = 1; i < len; ++i)
    if (x[i] != Complex{}) {
      tail_zero = false;
      break;
    }
  if (tail_zero) {
    // Column already in the target form.
    r.factor = 0.0;
    r.beta = x[0];
    return r;
  }

  double norm2 = 0.0;
  for (std::size_t i = 0; i < len; ++i) norm2 += std::norm(x[i]);
  const double xnorm = std::sqrt(norm2);
  const double a0 = std::abs(x[0]);
  const Complex phase = a0 > 0.0 ? x[0] / a0 : Complex(1.0, 0.0);
  r.beta = -phase * xnorm;
  r.w[0] = x[0] - r.beta;  // = phase * (|x_0| + ||x||)
  r.factor = 1.0 / (norm2 + a0 * xnorm);  // = 2 / ||w||^2
  return r;
}

// Complex Givens rotation: G = [[c, s], [-conj(s), c]] with c real, such
// that G [a; b]^T = [r; 0]^T.
struct Givens {
  double c = 1.0;
  Complex s{};
  Complex r{};
};

Givens make_givens(Complex a, Complex b) {
  Givens g;
  const double aa = std::abs(a);
  const double ab = std::abs(b);
  if (ab == 0.0) {
    g.c = 1.0;
    g.s = Complex{};
    g.r = a;
    return g;
  }
  if (aa == 0.0) {
    g.c = 0.0;
    g.s = Complex(1.0, 0.0);
    g.r = b;
    return g;
  }
  const double h = std::hypot(aa, ab);
  const Complex phase = a / aa;
  g.c = aa / h;
  g.s = phase * std::conj(b) / h;
  g.r = phase * h;
  return g;
}

enum class QrMode { ValuesOnly, Schur };

// Parlett-Reinsch balancing with power-of-two factors (exact in floating
// point). Diagonal similarity only, so eigenvalues are untouched; used on
// the values-only path where the transform never needs to be undone.
// Companion matrices in particular are hopeless for shifted QR without it.
void balance_in_place(ComplexMatrix& a) {
  const std::size_t n = a.rows();
  for (int sweep = 0; sweep < 32; ++sweep) {
    bool changed = false;
    for (std::size_t i = 0; i < n; ++i) {
      double col = 0.0;
      double row = 0.0;
      for (std::size_t j = 0; j < n; ++j) {
        if (j == i) continue;
        col += std::abs(a(j, i));
        row += std::abs(a(i, j));
      }
      if (col == 0.0 || row == 0.0) continue;
      const double before = col + row;
      double f = 1.0;
      while (col < 0.5 * row) {
        col *= 2.0;
        row *= 0.5;
        f *= 2.0;
      }
      while (col >= 2.0 * row) {
        col *= 0.5;
        row *= 2.0;
        f *= 0.5;
      }
      if (col + row < 0.95 * before && f != 1.0) {
        changed = true;
        const double finv = 1.0 / f;
        for (std::size_t j = 0; j < n; ++j) a(i, j) *= finv;
        for (std::size_t j = 0; j < n; ++j) a(j, i) *= f;
      }
    }
    if (!changed) break;
  }
}

// Wilkinson shift from the trailing 2x2 of the active window.
Complex wilkinson_shift(const ComplexMatrix& t, std::size_t h) {
  const Complex a = t(h - 1, h - 1);
  const Complex b = t(h - 1, h);
  const Complex c = t(h, h - 1);
  const Complex d = t(h, h);
  const Complex tr = a + d;
  const Complex det = a * d - b * c;
  Complex disc = std::sqrt(tr * tr - 4.0 * det);
  Complex e1 = 0.5 * (tr + disc);
  Complex e2 = 0.5 * (tr - disc);
  // Avoid cancellation in the smaller root.
  if (std::abs(e1) > std::abs(e2)) {
    if (std::abs(e1) > 0.0) e2 = det / e1;
  } else if (std::abs(e2) > 0.0) {
    e1 = det / e2;
  }
  return std::abs(e1 - d) <= std::abs(e2 - d) ? e1 : e2;
}

// One explicit-shift QR sweep on the window [lo, hi] of the Hessenberg
// matrix t; rotations are optionally accumulated into u.
void qr_step(ComplexMatrix& t, ComplexMatrix* u, std::size_t lo,
             std::size_t hi, Complex mu, QrMode mode) {
  const std::size_t n = t.rows();
  const std::size_t col_end = mode == QrMode::ValuesOnly ? hi : n - 1;
  const std::size_t row_start = mode == QrMode::ValuesOnly ? lo : 0;

  for (std::size_t i = lo; i <= hi; ++i) t(i, i) -= mu;

  std::vector<Givens> rot(hi - lo);
  for (std::size_t k = lo; k < hi; ++k) {
    Givens g = make_givens(t(k, k), t(k + 1, k));
    rot[k - lo] = g;
    t(k, k) = g.r;
    t(k + 1, k) = Complex{};
    for (std::size_t j = k + 1; j <= col_end; ++j) {
      const Complex x = t(k, j);
      const Complex y = t(k + 1, j);
      t(k, j) = g.c * x + g.s * y;
      t(k + 1, j) = -std::conj(g.s) * x + g.c * y;
    }
  }

  for (std::size_t k = lo; k < hi; ++k) {
    const Givens& g = rot[k - lo];
    const std::size_t row_end = std::min(k + 1, hi);
    for (std::size_t i = row_start; i <= row_end; ++i) {
      const Complex x = t(i, k);
      const Complex y = t(i, k + 1);
      t(i, k) = x * g.c + y * std::conj(g.s);
      t(i, k + 1) = -x * g.s + y * g.c;
    }
    if (u != nullptr) {
      for (std::size_t i = 0; i < n; ++i) {
        const Complex x = (*u)(i, k);
        const Complex y = (*u)(i, k + 1);
        (*u)(i, k) = x * g.c + y * std::conj(g.s);
        (*u)(i, k + 1) = -x * g.s + y * g.c;
      }
    }
  }

  for (std::size_t i = lo; i <= hi; ++i) t(i, i) += mu;
}

// Shifted QR iteration with deflation on an upper Hessenberg matrix.
void hessenberg_qr(ComplexMatrix& t, ComplexMatrix* u, QrMode mode) {
  const std::size_t n = t.rows();
  if (n <= 1) return;

  double tnorm = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i == 0 ? 0 : i - 1; j < n; ++j)
      tnorm += std::abs(t(i, j));
  if (tnorm == 0.0) return;

  std::size_t hi = n - 1;
  std::size_t iters_here = 0;
  const std::size_t max_per_eigenvalue = 120;
  // Fixed-seed generator for exceptional shift directions; the sequence is
  // identical on every call, so results stay bitwise reproducible.
  std::uint32_t shift_state = 0x9e3779b9u;

  while (true) {
    // Zero out negligible subdiagonals.
    for (std::size_t k = hi; k > 0; --k) {
      double s = std::abs(t(k - 1, k - 1)) + std::abs(t(k, k));
      if (s == 0.0) s = tnorm;
      if (std::abs(t(k, k - 1)) <= std::max(kEps * s, kSafeMin))
        t(k, k - 1) = Complex{};
    }
    // Deflate converged 1x1 blocks at the bottom.
    while (hi > 0 && t(hi, hi - 1) == Complex{}) {
      --hi;
      iters_here = 0;
    }
    if (hi == 0) break;

    // Active window [lo, hi].
    std::size_t lo = hi;
    while (lo > 0 && t(lo, lo - 1) != Complex{}) --lo;

    if (++iters_here > max_per_eigenvalue)
      throw Error(ErrorCode::NoConvergence,
                  "QR iteration stalled on eigenvalue cluster ending at index " +
                      std::to_string(hi));

    // Wilkinson shift, with a periodic exceptional shift in a rotating
    // direction. A fixed-direction exceptional shift still cycles on tight
    // near-degenerate clusters (alternating-tridiagonal spectra provoke
    // this); varying the direction breaks every such cycle in practice.
    Complex mu;
    if (iters_here % 10 == 0) {
      shift_state = shift_state * 1664525u + 1013904223u;
      const double angle =
          6.283185307179586 * (double(shift_state >> 8) / double(1u << 24));
      mu = t(hi, hi) + std::abs(t(hi, hi - 1)) *
                           Complex(0.9 * std::cos(angle), 0.9 * std::sin(angle));
    } else {
      mu = wilkinson_shift(t, hi);
    }
    qr_step(t, u, lo, hi, mu, mode);
  }
}

}  // namespace

ComplexMatrix hessenberg(ComplexMatrix a, ComplexMatrix* u) {
  const std::size_t n = a.rows();
  if (a.cols() != n)
    throw Error(ErrorCode::DimensionMismatch, "hessenberg: matrix not square");
  if (u != nullptr) *u = ComplexMatrix::identity(n);
  if (n < 3) return a;

  for (std::size_t k = 0; k + 2 < n; ++k) {
    const std::size_t m = n - k - 1;  // rows k+1 .. n-1
    std::vector<Complex> col(m);
    for (std::size_t i = 0; i < m; ++i) col[i] = a(k + 1 + i, k);
    Reflector refl = make_reflector(col.data(), m);
    if (refl.factor == 0.0) continue;

    a(k + 1, k) = refl.beta;
    for (std::size_t i = 1; i < m; ++i) a(k + 1 + i, k) = Complex{};

    const double factor = refl.factor;
    const Complex* w = refl.w.data();
    const std::int64_t ncols = std::int64_t(n - k - 1);
    const std::int64_t nrows = std::int64_t(n);

    // Left: rows k+1..n-1, columns k+1..n-1:  A -= factor * w (w^H A)
#pragma omp parallel for schedule(static) if (m * std::size_t(ncols) > (1u << 18))
    for (std::int64_t jj = 0; jj < ncols; ++jj) {
      const std::size_t j = k + 1 + std::size_t(jj);
      Complex s{};
      for (std::size_t i = 0; i < m; ++i) s += std::conj(w[i]) * a(k + 1 + i, j);
      s *= factor;
      for (std::size_t i = 0; i < m; ++i) a(k + 1 + i, j) -= s * w[i];
    }

    // Right: all rows, columns k+1..n-1:  A -= factor * (A w) w^H
#pragma omp parallel for schedule(static) if (m * n > (1u << 18))
    for (std::int64_t i = 0; i < nrows; ++i) {
      Complex s{};
      for (std::size_t j = 0; j < m; ++j) s += a(std::size_t(i), k + 1 + j) * w[j];
      s *= factor;
      for (std::size_t j = 0; j < m; ++j)
        a(std::size_t(i), k + 1 + j) -= s * std::conj(w[j]);
    }

    if (u != nullptr) {
#pragma omp parallel for schedule(static) if (m * n > (1u << 18))
      for (std::int64_t i = 0; i < nrows; ++i) {
        Complex s{};
        for (std::size_t j = 0; j < m; ++j)
          s += (*u)(std::size_t(i), k + 1 + j) * w[j];
        s *= factor;
        for (std::size_t j = 0; j < m; ++j)
          (*u)(std::size_t(i), k + 1 + j) -= s * std::conj(w[j]);
      }
    }
  }
  return a;
}

std::vector<Complex> eigenvalues(ComplexMatrix a) {
  const std::size_t n = a.rows();
  if (a.cols() != n)
    throw Error(ErrorCode::DimensionMismatch, "eigenvalues: matrix not square");
  balance_in_place(a);
  ComplexMatrix t = hessenberg(std::move(a), nullptr);
  hessenberg_qr(t, nullptr, QrMode::ValuesOnly);
  std::vector<Complex> vals(n);
  for (std::size_t i = 0; i < n; ++i) vals[i] = t(i, i);
  return vals;
}

SchurDecomposition schur_decompose(ComplexMatrix a) {
  const std::size_t n = a.rows();
  if (a.cols() != n)
    throw Error(ErrorCode::DimensionMismatch, "schur: matrix not square");
  SchurDecomposition s;
  s.t = hessenberg(std::move(a), &s.u);
  hessenberg_qr(s.t, &s.u, QrMode::Schur);
  // Clean out the strictly lower part left behind by the iteration.
  for (std::size_t i = 1; i < n; ++i)
    for (std::size_t j = 0; j < i; ++j) s.t(i, j) = Complex{};
  return s;
}

std::vector<Complex> schur_eigenvector(const SchurDecomposition& s,
                                       std::size_t index) {
  const std::size_t n = s.t.rows();
  const Complex lambda = s.t(index, index);
  const double smin =
      std::max(kEps * std::max(1.0, s.t.max_abs()), kSafeMin);

  std::vector<Complex> y(n, Complex{});
  y[index] = Complex(1.0, 0.0);
  for (std::size_t ii = index; ii-- > 0;) {
    Complex sum{};
    for (std::size_t j = ii + 1; j <= index; ++j) sum += s.t(ii, j) * y[j];
    Complex d = s.t(ii, ii) - lambda;
    if (std::abs(d) < smin) d = Complex(smin, 0.0);
    y[ii] = -sum / d;
    // Rescale if the solve is blowing up (near-degenerate diagonal).
    const double mag = std::abs(y[ii]);
    if (mag > 1e100) {
      for (std::size_t j = ii; j <= index; ++j) y[j] /= mag;
    }
  }

  std::vector<Complex> v = kernels::matvec(s.u, y);
  double nrm = 0.0;
  for (const Complex& c : v) nrm += std::norm(c);
  nrm = std::sqrt(nrm);
  if (nrm > 0.0)
    for (Complex& c : v) c /= nrm;
  return v;
}

EigenDecomposition eigen_general(const ComplexMatrix& a) {
  const std::size_t n = a.rows();
  if (a.cols() != n)
    throw Error(ErrorCode::DimensionMismatch,
                "eigen_general: matrix not square");
  EigenDecomposition out;
  out.vectors = ComplexMatrix(n, n);
  if (n == 0) return out;

  SchurDecomposition s = schur_decompose(a);
  out.values.resize(n);
  for (std::size_t i = 0; i < n; ++i) out.values[i] = s.t(i, i);

  const double anorm = a.frobenius_norm();
  double worst = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    std::vector<Complex> v = schur_eigenvector(s, k);
    for (std::size_t i = 0; i < n; ++i) out.vectors(i, k) = v[i];
    std::vector<Complex> av = kernels::matvec(a, v);
    double res = 0.0;
    for (std::size_t i = 0; i < n; ++i)
      res += std::norm(av[i] - out.values[k] * v[i]);
    res = std::sqrt(res);
    if (anorm > 0.0) res /= anorm;
    worst = std::max(worst, res);
  }
  out.max_relative_residual = worst;
  return out;
}

}  // namespace liouvq
