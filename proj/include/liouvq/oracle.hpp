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

/// Fermionic ladder operators on the full 2^L Fock space, built by the
/// Jordan-Wigner construction (sign string times a local lowering block).
/// Entries are exact signed integers, so anticommutators close exactly.
struct FockOperators {
  std::size_t num_sites = 0;
  std::vector<ComplexMatrix> annihilation;  // a_1 .. a_L, each 2^L x 2^L

  ComplexMatrix creation(std::size_t i) const { return annihilation[i].adjoint(); }
};

FockOperators jordan_wigner_operators(std::size_t num_sites);

/// Dense Hamiltonian of the quadratic spec on the Fock space.
ComplexMatrix fock_hamiltonian(const QuadraticLindbladSpec& spec);

/// Column-stacked 4^L x 4^L generator of the master equation: commutator
/// part plus matrix-rate dissipators (creation ops at rate 2 lambda_plus,
/// annihilation ops at rate 2 lambda_minus). Guarded to L <= 6.
ComplexMatrix build_superoperator(const QuadraticLindbladSpec& spec);

/// Correlations read directly from the kernel of the superoperator.
struct FockSteadyState {
  ComplexMatrix occupation;  // <a^dag_i a_j>
  ComplexMatrix pairing;     // <a_i a_j>
  double residual = 0.0;     // ||S vec(rho)||_inf / ||S||_inf
  bool unique = true;        // exactly one near-zero eigenvalue found
};

FockSteadyState superoperator_ness(const QuadraticLindbladSpec& spec);

struct RapidityMatch {
  Complex predicted{};
  bool matched = false;
  double distance = 0.0;
};

struct OracleReport {
  std::vector<Complex> superop_spectrum;
  double ness_residual = 0.0;
  double correlation_diff = 0.0;
  std::vector<RapidityMatch> rapidity_membership;
  bool ness_unique = true;
};

/// Ground-truth comparison for small chains (L <= 5): every even-sector
/// combination of the predicted rapidities must appear in the brute-force
/// spectrum, and the Lyapunov-route correlations must match the null-vector
/// route. A degenerate kernel is reported and the comparison skipped.
OracleReport oracle_compare(const QuadraticLindbladSpec& spec);

}  // namespace liouvq
