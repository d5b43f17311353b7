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

#include "liouvq/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>

#include "liouvq/eigen_solver.hpp"
#include "liouvq/kernels.hpp"
#include "liouvq/spectrum.hpp"
#include "liouvq/steady_state.hpp"

namespace liouvq {

namespace {

const Complex kImag(0.0, 1.0);

// out += alpha * (a kron b), without materializing the product.
void add_scaled_kron(ComplexMatrix& out, Complex alpha, const ComplexMatrix& a,
                     const ComplexMatrix& b) {
  const std::size_t br = b.rows();
  const std::size_t bc = b.cols();
  const std::int64_t ar = std::int64_t(a.rows());
#pragma omp parallel for schedule(static) if (out.size() > (1u << 20))
  for (std::int64_t ia = 0; ia < ar; ++ia)
    for (std::size_t ja = 0; ja < a.cols(); ++ja) {
      const Complex f = alpha * a(std::size_t(ia), ja);
      if (f == Complex{}) continue;
      for (std::size_t ib = 0; ib < br; ++ib)
        for (std::size_t jb = 0; jb < bc; ++jb)
          out(std::size_t(ia) * br + ib, ja * bc + jb) += f * b(ib, jb);
    }
}

double inf_norm(const ComplexMatrix& m) {
  double worst = 0.0;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    double s = 0.0;
    for (std::size_t j = 0; j < m.cols(); ++j) s += std::abs(m(i, j));
    worst = std::max(worst, s);
  }
  return worst;
}

Complex trace_product(const ComplexMatrix& rho, const ComplexMatrix& op) {
  // tr(rho * op)
  Complex t{};
  for (std::size_t i = 0; i < rho.rows(); ++i)
    for (std::size_t k = 0; k < rho.cols(); ++k) t += rho(i, k) * op(k, i);
  return t;
}

}  // namespace

FockOperators jordan_wigner_operators(std::size_t num_sites) {
  if (num_sites == 0 || num_sites > 6)
    throw Error(ErrorCode::TooLarge,
                "Fock-space construction supported for 1 <= L <= 6");
  const std::size_t dim = std::size_t(1) << num_sites;

  FockOperators ops;
  ops.num_sites = num_sites;
  ops.annihilation.reserve(num_sites);

  // Site 1 owns the most significant occupation bit.
  for (std::size_t site = 0; site < num_sites; ++site) {
    ComplexMatrix a(dim, dim);
    const std::size_t bit = num_sites - 1 - site;
    const std::size_t mask = std::size_t(1) << bit;
    for (std::size_t ket = 0; ket < dim; ++ket) {
      if ((ket & mask) == 0) continue;  // site empty, annihilates to zero
      // String sign: parity of occupations on sites left of this one.
      int string_bits = 0;
      for (std::size_t s = 0; s < site; ++s)
        if (ket & (std::size_t(1) << (num_sites - 1 - s))) ++string_bits;
      const double sign = (string_bits % 2 == 0) ? 1.0 : -1.0;
      a(ket ^ mask, ket) = Complex(sign, 0.0);
    }
    ops.annihilation.push_back(std::move(a));
  }
  return ops;
}

ComplexMatrix fock_hamiltonian(const QuadraticLindbladSpec& spec) {
  validate_spec(spec);
  const std::size_t n = spec.num_sites;
  const FockOperators ops = jordan_wigner_operators(n);
  const std::size_t dim = std::size_t(1) << n;

  ComplexMatrix h(dim, dim);
  for (std::size_t i = 0; i < n; ++i) {
    const ComplexMatrix ci = ops.creation(i);
    for (std::size_t j = 0; j < n; ++j) {
      if (spec.h(i, j) != Complex{})
        h += spec.h(i, j) * (ci * ops.annihilation[j]);
      if (spec.g(i, j) != Complex{})
        h += (0.5 * spec.g(i, j)) * (ci * ops.creation(j));
      if (spec.g(j, i) != Complex{})
        h += (0.5 * std::conj(spec.g(j, i))) *
             (ops.annihilation[i] * ops.annihilation[j]);
    }
  }
  return h;
}

ComplexMatrix build_superoperator(const QuadraticLindbladSpec& spec) {
  validate_spec(spec);
  const std::size_t n = spec.num_sites;
  if (n > 6)
    throw Error(ErrorCode::TooLarge, "superoperator guarded to L <= 6");

  const FockOperators ops = jordan_wigner_operators(n);
  const std::size_t dim = std::size_t(1) << n;
  const ComplexMatrix eye = ComplexMatrix::identity(dim);
  const ComplexMatrix h = fock_hamiltonian(spec);

  // Column stacking: vec(A rho B) = (B^t kron A) vec(rho).
  ComplexMatrix s(dim * dim, dim * dim);
  add_scaled_kron(s, -kImag, eye, h);
  add_scaled_kron(s, kImag, h.transpose(), eye);

  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const double rate_plus = 2.0 * spec.lambda_plus(i, j);
      if (rate_plus != 0.0) {
        // jump a^dag_i with partner a_j
        const ComplexMatrix adag_i = ops.creation(i);
        const ComplexMatrix& a_j = ops.annihilation[j];
        const ComplexMatrix aj_adagi = a_j * adag_i;
        add_scaled_kron(s, rate_plus, a_j.transpose(), adag_i);
        add_scaled_kron(s, -0.5 * rate_plus, eye, aj_adagi);
        add_scaled_kron(s, -0.5 * rate_plus, aj_adagi.transpose(), eye);
      }
      const double rate_minus = 2.0 * spec.lambda_minus(i, j);
      if (rate_minus != 0.0) {
        // jump a_i with partner a^dag_j
        const ComplexMatrix& a_i = ops.annihilation[i];
        const ComplexMatrix adag_j = ops.creation(j);
        const ComplexMatrix adagj_ai = adag_j * a_i;
        add_scaled_kron(s, rate_minus, adag_j.transpose(), a_i);
        add_scaled_kron(s, -0.5 * rate_minus, eye, adagj_ai);
        add_scaled_kron(s, -0.5 * rate_minus, adagj_ai.transpose(), eye);
      }
    }
  }
  return s;
}

FockSteadyState superoperator_ness(const QuadraticLindbladSpec& spec) {
  const std::size_t n = spec.num_sites;
  const std::size_t dim = std::size_t(1) << n;
  const ComplexMatrix s = build_superoperator(spec);
  const double snorm = inf_norm(s);

  SchurDecomposition sd = schur_decompose(s);
  const double zero_tol = std::max(1e-9 * snorm, 1e-300);
  std::size_t zero_index = 0;
  std::size_t zero_count = 0;
  for (std::size_t i = 0; i < sd.t.rows(); ++i) {
    if (std::abs(sd.t(i, i)) < zero_tol) {
      zero_index = i;
      ++zero_count;
    }
  }

  FockSteadyState out;
  out.unique = zero_count == 1;
  if (zero_count == 0)
    throw Error(ErrorCode::DegenerateNess,
                "no kernel vector found for the superoperator");

  std::vector<Complex> v = schur_eigenvector(sd, zero_index);
  ComplexMatrix rho(dim, dim);
  for (std::size_t col = 0; col < dim; ++col)
    for (std::size_t row = 0; row < dim; ++row)
      rho(row, col) = v[col * dim + row];

  Complex tr{};
  for (std::size_t i = 0; i < dim; ++i) tr += rho(i, i);
  if (std::abs(tr) < 1e-14)
    throw Error(ErrorCode::DegenerateNess,
                "kernel vector is traceless; cannot normalize to a state");
  const Complex inv_tr = Complex(1.0, 0.0) / tr;
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j) rho(i, j) *= inv_tr;

  // Residual of the stationarity condition, in the scaled vectorized norm.
  std::vector<Complex> rho_vec(dim * dim);
  for (std::size_t col = 0; col < dim; ++col)
    for (std::size_t row = 0; row < dim; ++row)
      rho_vec[col * dim + row] = rho(row, col);
  std::vector<Complex> srho = kernels::matvec(s, rho_vec);
  double worst = 0.0;
  for (const Complex& c : srho) worst = std::max(worst, std::abs(c));
  out.residual = snorm > 0.0 ? worst / snorm : worst;

  const FockOperators ops = jordan_wigner_operators(n);
  out.occupation = ComplexMatrix(n, n);
  out.pairing = ComplexMatrix(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    const ComplexMatrix adag_i = ops.creation(i);
    for (std::size_t j = 0; j < n; ++j) {
      out.occupation(i, j) = trace_product(rho, adag_i * ops.annihilation[j]);
      out.pairing(i, j) =
          trace_product(rho, ops.annihilation[i] * ops.annihilation[j]);
    }
  }
  return out;
}

OracleReport oracle_compare(const QuadraticLindbladSpec& spec) {
  if (spec.num_sites > 5)
    throw Error(ErrorCode::TooLarge, "oracle comparison guarded to L <= 5");

  OracleReport report;

  const ComplexMatrix s = build_superoperator(spec);
  report.superop_spectrum = eigenvalues(s);
  std::sort(report.superop_spectrum.begin(), report.superop_spectrum.end(),
            [](const Complex& a, const Complex& b) {
              if (a.real() != b.real()) return a.real() < b.real();
              return a.imag() < b.imag();
            });

  // Predicted even-sector eigenvalues: twice the sum of any two distinct
  // normal modes, plus the stationary value. Spanning the full 2L mode list
  // covers every pairwise combination of a mode and a conjugate mode without
  // leaning on the conjugate pairing itself.
  const SpectrumResult modes = rapidities(spec);
  std::vector<Complex> predicted;
  predicted.push_back(Complex{});
  for (std::size_t a = 0; a < modes.lambda_p.size(); ++a)
    for (std::size_t b = a + 1; b < modes.lambda_p.size(); ++b)
      predicted.push_back(2.0 * (modes.lambda_p[a] + modes.lambda_p[b]));

  for (const Complex& value : predicted) {
    RapidityMatch match;
    match.predicted = value;
    match.distance = std::numeric_limits<double>::infinity();
    for (const Complex& ev : report.superop_spectrum)
      match.distance = std::min(match.distance, std::abs(ev - value));
    match.matched = match.distance <= 1e-6;
    report.rapidity_membership.push_back(match);
  }

  // Correlations: null-vector route vs Lyapunov route.
  const FockSteadyState fock = superoperator_ness(spec);
  report.ness_residual = fock.residual;
  report.ness_unique = fock.unique;
  if (!fock.unique) {
    report.correlation_diff = std::numeric_limits<double>::quiet_NaN();
    return report;
  }

  const SteadyState lyap = observables(spec);
  const std::size_t n = spec.num_sites;
  double worst = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      worst = std::max(worst, std::abs(fock.occupation(i, j) - lyap.obs(i, j)));
      worst = std::max(worst, std::abs(fock.pairing(i, j) - lyap.pairings(i, j)));
    }
  report.correlation_diff = worst;
  return report;
}

}  // namespace liouvq
