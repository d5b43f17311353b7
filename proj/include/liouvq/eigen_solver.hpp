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

#include "liouvq/matrix.hpp"

namespace liouvq {

/// A = U T U^H with T upper triangular and U unitary.
struct SchurDecomposition {
  ComplexMatrix t;
  ComplexMatrix u;
};

struct EigenDecomposition {
  std::vector<Complex> values;
  /// Columns are unit-norm right eigenvectors matching `values` by index.
  ComplexMatrix vectors;
  /// max_k ||A v_k - lambda_k v_k||_2 / ||A||_F
  double max_relative_residual = 0.0;
};

/// Reduce to upper Hessenberg form by Householder similarity. If `u` is
/// non-null it receives the accumulated unitary with a = u * h * u^H.
ComplexMatrix hessenberg(ComplexMatrix a, ComplexMatrix* u);

/// Dense nonsymmetric eigenvalues by Hessenberg reduction and shifted QR
/// iteration with deflation. Throws NoConvergence past the iteration cap.
std::vector<Complex> eigenvalues(ComplexMatrix a);

SchurDecomposition schur_decompose(ComplexMatrix a);

/// Right eigenvector of a Schur pair for the eigenvalue at position `index`
/// on the diagonal of t, by back-substitution. Unit 2-norm.
std::vector<Complex> schur_eigenvector(const SchurDecomposition& s,
                                       std::size_t index);

/// Values plus right eigenvectors plus a residual certificate.
EigenDecomposition eigen_general(const ComplexMatrix& a);

}  // namespace liouvq
