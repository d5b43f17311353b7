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

#include <doctest.h>

#include "liouvq/kernels.hpp"
#include "support/test_utils.hpp"

using namespace liouvq;
using liouvq::testing::random_complex;

TEST_CASE("matmul matches a hand-checked product") {
  ComplexMatrix a(2, 3);
  a(0, 0) = 1.0;
  a(0, 1) = Complex(0.0, 1.0);
  a(1, 2) = 2.0;
  ComplexMatrix b(3, 2);
  b(0, 0) = 1.0;
  b(1, 0) = 3.0;
  b(2, 1) = Complex(0.0, -1.0);
  ComplexMatrix c = kernels::matmul(a, b);
  CHECK(c(0, 0) == Complex(1.0, 3.0));
  CHECK(c(0, 1) == Complex(0.0, 0.0));
  CHECK(c(1, 1) == Complex(0.0, -2.0));
}

TEST_CASE("parallel kernels are bitwise identical to the serial reference") {
  std::mt19937_64 rng(7);
  // Sizes straddling the parallelization threshold.
  for (std::size_t n : {17, 64, 160}) {
    ComplexMatrix a = random_complex(rng, n);
    ComplexMatrix b = random_complex(rng, n);
    CHECK(kernels::matmul(a, b) == kernels::serial::matmul(a, b));

    std::vector<Complex> x(n);
    for (auto& v : x) v = Complex(1.0, -0.5);
    CHECK(kernels::matvec(a, x) == kernels::serial::matvec(a, x));
  }
  ComplexMatrix a = random_complex(rng, 9);
  ComplexMatrix b = random_complex(rng, 40);
  CHECK(kernels::kron(a, b) == kernels::serial::kron(a, b));
}

TEST_CASE("kron layout") {
  ComplexMatrix a(2, 2);
  a(0, 0) = 2.0;
  a(1, 1) = Complex(0.0, 1.0);
  ComplexMatrix b(2, 2);
  b(0, 1) = 1.0;
  b(1, 0) = -1.0;
  ComplexMatrix k = kernels::kron(a, b);
  REQUIRE(k.rows() == 4);
  CHECK(k(0, 1) == Complex(2.0, 0.0));
  CHECK(k(1, 0) == Complex(-2.0, 0.0));
  CHECK(k(2, 3) == Complex(0.0, 1.0));
  CHECK(k(3, 2) == Complex(0.0, -1.0));
  CHECK(k(0, 3) == Complex(0.0, 0.0));
}

TEST_CASE("matmul is associative within roundoff") {
  std::mt19937_64 rng(11);
  ComplexMatrix a = random_complex(rng, 12);
  ComplexMatrix b = random_complex(rng, 12);
  ComplexMatrix c = random_complex(rng, 12);
  ComplexMatrix left = (a * b) * c;
  ComplexMatrix right = a * (b * c);
  CHECK((left - right).max_abs() < 1e-12 * left.max_abs() * 100);
}

TEST_CASE("dimension mismatch is rejected") {
  ComplexMatrix a(2, 3);
  ComplexMatrix b(2, 2);
  CHECK_THROWS_AS((void)kernels::matmul(a, b), Error);
}
