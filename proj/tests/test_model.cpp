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

#include "liouvq/model.hpp"
#include "support/test_utils.hpp"

using namespace liouvq;

namespace {

QuadraticLindbladSpec zero_spec(std::size_t n) {
  QuadraticLindbladSpec s;
  s.num_sites = n;
  s.h = ComplexMatrix(n, n);
  s.g = ComplexMatrix(n, n);
  s.lambda_plus = RealMatrix(n, n);
  s.lambda_minus = RealMatrix(n, n);
  return s;
}

}  // namespace

TEST_CASE("zero model is valid") {
  CHECK_NOTHROW(validate_spec(zero_spec(3)));
}

TEST_CASE("symmetric pairing block is rejected") {
  QuadraticLindbladSpec s = zero_spec(3);
  s.g(0, 1) = 1.0;
  s.g(1, 0) = 1.0;
  SpecViolation v;
  CHECK_FALSE(check_spec(s, &v));
  CHECK(v.code == ErrorCode::NotAntisymmetric);
  CHECK(v.magnitude == doctest::Approx(2.0));
  CHECK_THROWS_AS(validate_spec(s), Error);
}

TEST_CASE("negative rate matrix is rejected") {
  QuadraticLindbladSpec s = zero_spec(3);
  s.lambda_plus(0, 0) = -0.1;
  SpecViolation v;
  CHECK_FALSE(check_spec(s, &v));
  CHECK(v.code == ErrorCode::NegativeRateMatrix);
  CHECK(v.magnitude == doctest::Approx(0.1));
}

TEST_CASE("non-Hermitian hopping and shape mismatches are rejected") {
  QuadraticLindbladSpec s = zero_spec(2);
  s.h(0, 1) = Complex(0.0, 1.0);
  s.h(1, 0) = Complex(0.0, 1.0);  // Hermitian would need -i
  SpecViolation v;
  CHECK_FALSE(check_spec(s, &v));
  CHECK(v.code == ErrorCode::NotHermitian);

  QuadraticLindbladSpec bad = zero_spec(2);
  bad.h = ComplexMatrix(3, 3);
  CHECK_FALSE(check_spec(bad, &v));
  CHECK(v.code == ErrorCode::DimensionMismatch);
}

TEST_CASE("non-boundary PSD rate matrices pass") {
  std::mt19937_64 rng(31);
  QuadraticLindbladSpec s = zero_spec(4);
  s.lambda_plus = liouvq::testing::random_psd(rng, 4);
  s.lambda_minus = liouvq::testing::random_psd(rng, 4);
  CHECK_NOTHROW(validate_spec(s));
}

TEST_CASE("XY chain matrix entries") {
  XYChainParams p;
  p.num_sites = 3;
  p.coupling = 1.0;
  p.anisotropy = 0.5;
  auto s = xy_chain_spec(p);
  CHECK(s.g(0, 1) == Complex(0.5, 0.0));
  CHECK(s.g(1, 0) == Complex(-0.5, 0.0));
  CHECK(s.g(1, 2) == Complex(0.5, 0.0));
  CHECK(s.h(0, 1) == Complex(1.0, 0.0));
  CHECK(s.h(0, 0) == Complex(0.0, 0.0));
}

TEST_CASE("XY chain with no hopping") {
  XYChainParams p;
  p.num_sites = 2;
  p.coupling = 0.0;
  p.anisotropy = 1.0;
  p.field = 0.3;
  auto s = xy_chain_spec(p);
  CHECK(s.h(0, 0) == Complex(0.6, 0.0));
  CHECK(s.h(1, 1) == Complex(0.6, 0.0));
  CHECK(s.g.max_abs() == 0.0);
}

TEST_CASE("XY chain boundary rates") {
  XYChainParams p;
  p.num_sites = 3;
  p.coupling = 1.0;
  p.anisotropy = 1.0;
  p.inject_1 = 0.6;
  p.extract_1 = 0.4;
  p.inject_l = 0.5;
  p.extract_l = 0.5;
  auto s = xy_chain_spec(p);
  CHECK(s.lambda_plus(0, 0) == 0.6);
  CHECK(s.lambda_plus(1, 1) == 0.0);
  CHECK(s.lambda_plus(2, 2) == 0.5);
  CHECK(s.lambda_minus(0, 0) == 0.4);
  CHECK(s.lambda_minus(2, 2) == 0.5);
}

TEST_CASE("XY chain output always validates; isotropic limit kills pairing") {
  std::mt19937_64 rng(41);
  for (int t = 0; t < 20; ++t) {
    std::uniform_int_distribution<std::size_t> ln(2, 9);
    XYChainParams p = liouvq::testing::random_xy(rng, ln(rng));
    auto s = xy_chain_spec(p);
    CHECK_NOTHROW(validate_spec(s));
    // boundary-only driving: at most two nonzero diagonal rate entries
    int nonzero = 0;
    for (std::size_t i = 0; i < s.num_sites; ++i)
      if (s.lambda_plus(i, i) != 0.0 || s.lambda_minus(i, i) != 0.0) ++nonzero;
    CHECK(nonzero <= 2);
  }
  XYChainParams iso;
  iso.num_sites = 5;
  iso.anisotropy = 0.0;
  CHECK(xy_chain_spec(iso).g.max_abs() == 0.0);
}

TEST_CASE("parameter validation") {
  XYChainParams p;
  p.num_sites = 1;
  CHECK_THROWS_AS(xy_chain_spec(p), Error);
  p.num_sites = 3;
  p.inject_1 = -0.3;
  CHECK_THROWS_AS(validate_params(p), Error);
  p.inject_1 = 0.0;
  p.anisotropy = 1.5;
  CHECK_THROWS_AS(validate_params(p), Error);
}
