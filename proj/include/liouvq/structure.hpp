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

#include "liouvq/model.hpp"

namespace liouvq {

enum class Sign { plus, minus };

/// All structure matrices derived from one spec, materialized so the
/// symmetry identities can be asserted directly on them.
struct StructureMatrices {
  ComplexMatrix bar_p;    // L x L
  ComplexMatrix p;        // 2L x 2L
  ComplexMatrix m;        // 2L x 2L
  ComplexMatrix j_block;  // 2L x 2L, blockdiag(lambda_plus, -lambda_minus)
  ComplexMatrix g;        // 4L x 4L coefficient matrix
  ComplexMatrix x;        // 2L x 2L swap
  ComplexMatrix y;        // 2L x 2L, -i * antisymmetric swap
  ComplexMatrix z;        // 2L x 2L, blockdiag(1, -1)
  ComplexMatrix k_plus;   // L x L alternating signs, +1 first
  ComplexMatrix k_minus;  // L x L alternating signs, -1 first
};

// Constant matrices.
ComplexMatrix build_x(std::size_t num_sites);
ComplexMatrix build_y(std::size_t num_sites);
ComplexMatrix build_z(std::size_t num_sites);
ComplexMatrix build_k(Sign sign, std::size_t num_sites);

/// (-i h - lambda_minus^t + lambda_plus) / 2
ComplexMatrix build_h_bar(const QuadraticLindbladSpec& spec);

/// (-i h - lambda_minus^t - lambda_plus) / 2
ComplexMatrix build_bar_p(const QuadraticLindbladSpec& spec);

/// [[bar_p, -i g/2], [i g*/2, bar_p*]]
ComplexMatrix build_p(const QuadraticLindbladSpec& spec);

ComplexMatrix build_m(const QuadraticLindbladSpec& spec);
ComplexMatrix build_j_block(const QuadraticLindbladSpec& spec);

/// The 4L x 4L coefficient matrix of the quadratic Lindbladian form.
ComplexMatrix build_g_matrix(const QuadraticLindbladSpec& spec);

/// bar_p - i g k_sign / 2; the L x L reduction valid when the alternating
/// sign conjugation maps bar_p to its conjugate (zero transverse field).
/// Throws AnsatzViolation otherwise.
ComplexMatrix build_q(const QuadraticLindbladSpec& spec, Sign sign);

StructureMatrices build_structure(const QuadraticLindbladSpec& spec);

}  // namespace liouvq
