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
namespace kernels {

// Serial reference kernels. These are the ground truth the OpenMP variants
// are tested against; they must stay simple enough to audit by eye.
namespace serial {

ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);
std::vector<Complex> matvec(const ComplexMatrix& a,
                            const std::vector<Complex>& x);

}  // namespace serial

// OpenMP kernels. Each output element is computed by exactly one thread in
// the same arithmetic order as the serial kernel, so results are bitwise
// identical to the serial reference for any thread count.

ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);
std::vector<Complex> matvec(const ComplexMatrix& a,
                            const std::vector<Complex>& x);

}  // namespace kernels

inline ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
  return kernels::matmul(a, b);
}

}  // namespace liouvq
