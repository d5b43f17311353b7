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

#include "liouvq/structure.hpp"

#include <sstream>

namespace liouvq {

namespace {

const Complex kImag(0.0, 1.0);

}  // namespace

ComplexMatrix build_x(std::size_t n) {
  ComplexMatrix x(2 * n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    x(i, n + i) = 1.0;
    x(n + i, i) = 1.0;
  }
  return x;
}

ComplexMatrix build_y(std::size_t n) {
  ComplexMatrix y(2 * n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    y(i, n + i) = -kImag;
    y(n + i, i) = kImag;
  }
  return y;
}

ComplexMatrix build_z(std::size_t n) {
  ComplexMatrix z(2 * n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    z(i, i) = 1.0;
    z(n + i, n + i) = -1.0;
  }
  return z;
}

ComplexMatrix build_k(Sign sign, std::size_t n) {
  ComplexMatrix k(n, n);
  const double first = sign == Sign::plus ? 1.0 : -1.0;
  for (std::size_t i = 0; i < n; ++i)
    k(i, i) = (i % 2 == 0) ? first : -first;
  return k;
}

ComplexMatrix build_h_bar(const QuadraticLindbladSpec& spec) {
  const std::size_t n = spec.num_sites;
  ComplexMatrix out(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      out(i, j) = 0.5 * (-kImag * spec.h(i, j) - spec.lambda_minus(j, i) +
                         spec.lambda_plus(i, j));
  return out;
}

ComplexMatrix build_bar_p(const QuadraticLindbladSpec& spec) {
  const std::size_t n = spec.num_sites;
  ComplexMatrix out(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      out(i, j) = 0.5 * (-kImag * spec.h(i, j) - spec.lambda_minus(j, i) -
                         spec.lambda_plus(i, j));
  return out;
}

ComplexMatrix build_p(const QuadraticLindbladSpec& spec) {
  const std::size_t n = spec.num_sites;
  const ComplexMatrix bar_p = build_bar_p(spec);
  ComplexMatrix p(2 * n, 2 * n);
  p.set_block(0, 0, bar_p);
  p.set_block(0, n, (-0.5 * kImag) * spec.g);
  p.set_block(n, 0, (0.5 * kImag) * spec.g.conjugate());
  p.set_block(n, n, bar_p.conjugate());
  return p;
}

ComplexMatrix build_m(const QuadraticLindbladSpec& spec) {
  const std::size_t n = spec.num_sites;
  const ComplexMatrix h_bar = build_h_bar(spec);
  ComplexMatrix m(2 * n, 2 * n);
  m.set_block(0, 0, h_bar);
  m.set_block(0, n, (-0.5 * kImag) * spec.g);
  m.set_block(n, 0, (0.5 * kImag) * spec.g.conjugate());
  m.set_block(n, n, (-1.0) * h_bar.transpose());
  return m;
}

ComplexMatrix build_j_block(const QuadraticLindbladSpec& spec) {
  const std::size_t n = spec.num_sites;
  ComplexMatrix j(2 * n, 2 * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      j(i, k) = spec.lambda_plus(i, k);
      j(n + i, n + k) = -spec.lambda_minus(i, k);
    }
  return j;
}

ComplexMatrix build_g_matrix(const QuadraticLindbladSpec& spec) {
  const std::size_t n = spec.num_sites;
  const ComplexMatrix h_bar = build_h_bar(spec);
  const ComplexMatrix lp = to_complex(spec.lambda_plus);
  const ComplexMatrix lm = to_complex(spec.lambda_minus);
  const ComplexMatrix g_half = (0.5 * kImag) * spec.g;
  const ComplexMatrix g_conj_half = (0.5 * kImag) * spec.g.conjugate();

  ComplexMatrix g(4 * n, 4 * n);
  g.set_block(0, 0, h_bar);
  g.set_block(0, n, (-1.0) * g_half);
  g.set_block(0, 2 * n, lp);
  g.set_block(n, 0, g_conj_half);
  g.set_block(n, n, (-1.0) * h_bar.transpose());
  g.set_block(n, 3 * n, (-1.0) * lm);
  g.set_block(2 * n, 0, lm.transpose());
  g.set_block(2 * n, 2 * n, (-1.0) * h_bar.adjoint());
  g.set_block(2 * n, 3 * n, g_half);
  g.set_block(3 * n, n, (-1.0) * lp.transpose());
  g.set_block(3 * n, 2 * n, (-1.0) * g_conj_half);
  g.set_block(3 * n, 3 * n, h_bar.conjugate());
  return g;
}

ComplexMatrix build_q(const QuadraticLindbladSpec& spec, Sign sign) {
  const std::size_t n = spec.num_sites;
  const ComplexMatrix bar_p = build_bar_p(spec);
  const ComplexMatrix k = build_k(sign, n);

  // The reduction needs K bar_p K = bar_p* and K g K = -g.
  double worst = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Complex sij = k(i, i) * k(j, j);
      worst = std::max(worst,
                       std::abs(sij * bar_p(i, j) - std::conj(bar_p(i, j))));
      worst = std::max(worst, std::abs(sij * spec.g(i, j) + spec.g(i, j)));
    }
  if (worst > 1e-12) {
    std::ostringstream msg;
    msg << "alternating-sign conjugation fails by " << worst
        << " (requires zero transverse field)";
    throw Error(ErrorCode::AnsatzViolation, msg.str());
  }

  ComplexMatrix q = bar_p;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      q(i, j) -= 0.5 * kImag * spec.g(i, j) * k(j, j);
  return q;
}

StructureMatrices build_structure(const QuadraticLindbladSpec& spec) {
  StructureMatrices s;
  s.bar_p = build_bar_p(spec);
  s.p = build_p(spec);
  s.m = build_m(spec);
  s.j_block = build_j_block(spec);
  s.g = build_g_matrix(spec);
  s.x = build_x(spec.num_sites);
  s.y = build_y(spec.num_sites);
  s.z = build_z(spec.num_sites);
  s.k_plus = build_k(Sign::plus, spec.num_sites);
  s.k_minus = build_k(Sign::minus, spec.num_sites);
  return s;
}

}  // namespace liouvq
