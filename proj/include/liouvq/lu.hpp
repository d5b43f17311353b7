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

/// PA = LU with partial pivoting, packed in a single matrix.
struct LuDecomposition {
  ComplexMatrix lu;
  std::vector<std::size_t> pivot;  // row swapped with k at step k
  int parity = 1;                  // permutation sign
  bool singular = false;
  double min_pivot = 0.0;
  double max_pivot = 0.0;
};

LuDecomposition lu_factor(ComplexMatrix a);

/// Solve A x = b from the factorization. Throws Singular when the
/// factorization flagged a zero pivot.
std::vector<Complex> lu_solve(const LuDecomposition& f, std::vector<Complex> b);
ComplexMatrix lu_solve(const LuDecomposition& f, ComplexMatrix b);

Complex determinant(const ComplexMatrix& a);

}  // namespace liouvq
