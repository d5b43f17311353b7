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

#include "liouvq/steady_state.hpp"
#include "support/test_utils.hpp"

using namespace liouvq;

namespace {

XYChainParams xx_equal_baths(std::size_t n) {
  XYChainParams p;
  p.num_sites = n;
  p.coupling = 1.0;
  p.anisotropy = 0.0;
  p.field = 0.0;
  p.inject_1 = 0.3;
  p.extract_1 = 0.7;
  p.inject_l = 0.3;
  p.extract_l = 0.7;
  return p;
}

}  // namespace

TEST_CASE("right-hand side block structure") {
  XYChainParams p = xx_equal_baths(3);
  auto spec = xy_chain_spec(p);
  ComplexMatrix rhs = build_rhs(spec);
  REQUIRE(rhs.rows() == 6);
  CHECK(rhs(0, 0) == Complex(0.3, 0.0));
  CHECK(rhs(1, 1) == Complex(0.0, 0.0));
  CHECK(rhs(2, 2) == Complex(0.3, 0.0));
  CHECK(rhs(3, 3) == Complex(0.7, 0.0));
  CHECK(rhs(5, 5) == Complex(0.7, 0.0));
  CHECK(rhs.block(0, 3, 3, 3).max_abs() == 0.0);
  CHECK(rhs.block(3, 0, 3, 3).max_abs() == 0.0);

  // general symmetric rate matrices land in the two diagonal blocks
  std::mt19937_64 rng(83);
  auto gen = liouvq::testing::random_spec(rng, 3);
  ComplexMatrix rhs2 = build_rhs(gen);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) {
      CHECK(rhs2(i, j) == Complex(gen.lambda_plus(i, j), 0.0));
      CHECK(rhs2(3 + i, 3 + j) == Complex(gen.lambda_minus(i, j), 0.0));
    }
}

TEST_CASE("equal baths fill the isotropic chain uniformly") {
  SteadyState s = observables(xy_chain_spec(xx_equal_baths(3)));
  for (double n : s.occupations) CHECK(n == doctest::Approx(0.3).epsilon(1e-9));
  for (double m : s.magnetization_z)
    CHECK(m == doctest::Approx(-0.4).epsilon(1e-9));
  CHECK(s.residual < 1e-10);
  // number-conserving chain: pairings vanish
  CHECK(s.pairings.max_abs() < 1e-9);
}

TEST_CASE("loss-only chain relaxes to the vacuum") {
  XYChainParams p = xx_equal_baths(4);
  p.inject_1 = 0.0;
  p.inject_l = 0.0;
  SteadyState s = observables(xy_chain_spec(p));
  for (double n : s.occupations) CHECK(std::abs(n) < 1e-9);
  CHECK(s.pairings.max_abs() < 1e-9);
}

TEST_CASE("observable matrix identities") {
  // anisotropic driven chain with unequal baths carries current and complex
  // correlations; the operator identities must hold regardless
  XYChainParams p;
  p.num_sites = 4;
  p.coupling = 1.0;
  p.anisotropy = 0.6;
  p.field = 0.3;
  p.inject_1 = 0.8;
  p.extract_1 = 0.1;
  p.inject_l = 0.2;
  p.extract_l = 0.9;
  auto spec = xy_chain_spec(p);
  SteadyState s = observables(spec);
  const std::size_t n = 4;

  CHECK((s.obs + s.omega.transpose()).max_abs() == 0.0);

  // occupation block Hermitian, occupations physical
  for (std::size_t i = 0; i < n; ++i) {
    CHECK(s.occupations[i] >= -1e-8);
    CHECK(s.occupations[i] <= 1.0 + 1e-8);
    for (std::size_t j = 0; j < n; ++j)
      CHECK(std::abs(s.obs(i, j) - std::conj(s.obs(j, i))) < 1e-9);
  }

  // pairing block antisymmetric
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      CHECK(std::abs(s.pairings(i, j) + s.pairings(j, i)) < 1e-9);

  // canonical anticommutator: O_{ij} + O_{L+j, L+i} = delta_ij
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Complex lhs = s.obs(i, j) + s.obs(n + j, n + i);
      CHECK(std::abs(lhs - (i == j ? Complex(1.0, 0.0) : Complex{})) < 1e-9);
    }

  CHECK(s.residual < 1e-10);
}

TEST_CASE("marginal spectrum propagates as an error") {
  XYChainParams ising;
  ising.num_sites = 3;
  ising.coupling = 1.0;
  ising.anisotropy = 1.0;
  ising.field = 0.0;
  ising.inject_1 = 0.5;
  ising.extract_1 = 0.5;
  ising.inject_l = 0.5;
  ising.extract_l = 0.5;
  // This family has strictly damped modes at L=3 (no interior block), so
  // use L=4 where +-iJ modes appear and the covariance diverges.
  ising.num_sites = 4;
  try {
    (void)observables(xy_chain_spec(ising));
    FAIL("expected MarginalSpectrum");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::MarginalSpectrum);
  }
}
