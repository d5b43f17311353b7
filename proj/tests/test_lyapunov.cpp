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

#include "liouvq/eigen_solver.hpp"
#include "liouvq/lyapunov.hpp"
#include "liouvq/structure.hpp"
#include "support/test_utils.hpp"

using namespace liouvq;
using liouvq::testing::random_complex;

namespace {

ComplexMatrix random_stable(std::mt19937_64& rng, std::size_t n) {
  ComplexMatrix a = random_complex(rng, n);
  double max_re = -1e300;
  for (const Complex& v : eigenvalues(a)) max_re = std::max(max_re, v.real());
  for (std::size_t i = 0; i < n; ++i) a(i, i) -= Complex(max_re + 0.5, 0.0);
  return a;
}

}  // namespace

TEST_CASE("scalar equation") {
  ComplexMatrix a(1, 1);
  a(0, 0) = Complex(-0.7, 1.3);
  ComplexMatrix c(1, 1);
  c(0, 0) = Complex(0.4, -0.1);
  ComplexMatrix x = solve_lyapunov(a, c);
  Complex expected = c(0, 0) / (a(0, 0) + std::conj(a(0, 0)));
  CHECK(std::abs(x(0, 0) - expected) < 1e-15);
}

TEST_CASE("Schur solver agrees with the vectorized solve") {
  std::mt19937_64 rng(79);
  for (std::size_t n : {4, 9, 20}) {
    ComplexMatrix a = random_stable(rng, n);
    ComplexMatrix c = random_complex(rng, n);
    ComplexMatrix x1 = solve_lyapunov(a, c);
    ComplexMatrix x2 = solve_lyapunov_kron(a, c);
    const double scale = std::max(a.max_abs(), c.max_abs());
    CHECK(lyapunov_residual(a, x1, c) / scale < 1e-10);
    CHECK(lyapunov_residual(a, x2, c) / scale < 1e-10);
    CHECK((x1 - x2).max_abs() < 1e-9);
  }
}

TEST_CASE("marginal spectra fail loudly") {
  // explicit zero eigenvalue
  ComplexMatrix a(2, 2);
  a(0, 0) = Complex(0.0, 0.0);
  a(1, 1) = Complex(-1.0, 0.0);
  ComplexMatrix c = ComplexMatrix::identity(2);
  CHECK_THROWS_AS((void)solve_lyapunov(a, c), Error);
  try {
    (void)solve_lyapunov(a, c);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::MarginalSpectrum);
  }
  CHECK_THROWS_AS((void)solve_lyapunov_kron(a, c), Error);
  try {
    (void)solve_lyapunov_kron(a, c);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::Singular);
  }

  // purely oscillatory modes of the zero-field Ising chain
  XYChainParams ising;
  ising.num_sites = 4;
  ising.coupling = 1.0;
  ising.anisotropy = 1.0;
  ising.inject_1 = 0.5;
  ising.extract_1 = 0.5;
  ising.inject_l = 0.5;
  ising.extract_l = 0.5;
  auto spec = xy_chain_spec(ising);
  try {
    (void)solve_lyapunov(build_p(spec), ComplexMatrix::identity(8));
    FAIL("marginal spectrum must not produce a solution");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::MarginalSpectrum);
  }
}

TEST_CASE("vectorized solver size guard") {
  ComplexMatrix big(65, 65);
  CHECK_THROWS_AS((void)solve_lyapunov_kron(big, big), Error);
}
