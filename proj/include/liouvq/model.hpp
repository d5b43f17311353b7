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

#include <cstddef>
#include <string>

#include "liouvq/matrix.hpp"

namespace liouvq {

/// Quadratic fermionic Lindbladian: Hamiltonian blocks h (hopping, Hermitian)
/// and g (pairing, antisymmetric), plus real symmetric non-negative rate
/// matrices for injection (lambda_plus) and extraction (lambda_minus).
struct QuadraticLindbladSpec {
  std::size_t num_sites = 0;
  ComplexMatrix h;
  ComplexMatrix g;
  RealMatrix lambda_plus;
  RealMatrix lambda_minus;
};

/// Physical parameters of the boundary-driven XY chain.
struct XYChainParams {
  std::size_t num_sites = 2;
  double coupling = 1.0;    // J
  double anisotropy = 0.0;  // gamma in [-1, 1]
  double field = 0.0;       // transverse field h_z
  double inject_1 = 0.0;    // injection rate at site 1
  double extract_1 = 0.0;   // extraction rate at site 1
  double inject_l = 0.0;    // injection rate at site L
  double extract_l = 0.0;   // extraction rate at site L

  double gamma_1() const { return inject_1 + extract_1; }
  double gamma_l() const { return inject_l + extract_l; }
};

struct SpecViolation {
  ErrorCode code = ErrorCode::DimensionMismatch;
  std::string invariant;
  double magnitude = 0.0;
};

/// Non-throwing invariant check; returns the worst violation if any.
/// Tolerance for all invariants is 1e-12.
bool check_spec(const QuadraticLindbladSpec& spec, SpecViolation* out);

/// Returns the spec unchanged when all type invariants hold; throws an Error
/// naming the violated invariant and the largest violation magnitude.
const QuadraticLindbladSpec& validate_spec(const QuadraticLindbladSpec& spec);

/// Build the quadratic spec of the boundary-driven XY chain. The hopping
/// block carries h(l,l+1) = J and h(l,l) = 2 h_z so the derived structure
/// matrices take their standard boundary-driven form; the pairing block has
/// g(l,l+1) = J*gamma = -g(l+1,l); rates sit on the diagonal ends only.
QuadraticLindbladSpec xy_chain_spec(const XYChainParams& params);

void validate_params(const XYChainParams& params);

}  // namespace liouvq
