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

#include "liouvq/spectrum.hpp"
#include "support/test_utils.hpp"

using namespace liouvq;
using liouvq::testing::multiset_distance;

namespace {

XYChainParams ising_unit(std::size_t n, double field = 0.0) {
  XYChainParams p;
  p.num_sites = n;
  p.coupling = 1.0;
  p.anisotropy = 1.0;
  p.field = field;
  p.inject_1 = 0.5;
  p.extract_1 = 0.5;
  p.inject_l = 0.5;
  p.extract_l = 0.5;
  return p;
}

}  // namespace

TEST_CASE("Ising chain of four sites: known normal-mode multiset") {
  SpectrumResult r = rapidities(xy_chain_spec(ising_unit(4)));
  const double s15 = std::sqrt(15.0) / 4.0;
  std::vector<Complex> expected = {
      {-0.5, 0.0}, {-0.5, 0.0},   {0.0, 1.0},    {0.0, -1.0},
      {-0.25, s15}, {-0.25, -s15}, {-0.25, s15},  {-0.25, -s15}};
  CHECK(multiset_distance(r.lambda_p, expected) < 1e-9);
  CHECK(r.pairing_ok);
  CHECK(r.residual < 1e-10);
  // rapidities are twice the normal-mode values
  for (std::size_t i = 0; i < r.lambda_p.size(); ++i)
    CHECK(r.rapidities[i] == 2.0 * r.lambda_p[i]);
  // purely imaginary modes put the gap at (numerical) zero
  CHECK(r.gap <= 1e-12);
}

TEST_CASE("zero model: all modes zero") {
  QuadraticLindbladSpec s;
  s.num_sites = 2;
  s.h = ComplexMatrix(2, 2);
  s.g = ComplexMatrix(2, 2);
  s.lambda_plus = RealMatrix(2, 2);
  s.lambda_minus = RealMatrix(2, 2);
  SpectrumResult r = rapidities(s);
  for (const Complex& v : r.lambda_p) CHECK(v == Complex{});
  CHECK(r.gap == 0.0);
}

TEST_CASE("gap arithmetic on a frozen mode set") {
  std::vector<Complex> modes = {{-0.3, 0.0}, {-0.1, 0.5}, {-0.1, -0.5}};
  CHECK(relaxation_gap(modes) == doctest::Approx(0.2).epsilon(1e-12));
}

TEST_CASE("stability, trace identity and pairing for random specs") {
  std::mt19937_64 rng(73);
  for (int t = 0; t < 8; ++t) {
    auto spec = liouvq::testing::random_spec(rng, 4);
    SpectrumResult r = rapidities(spec);
    Complex total{};
    for (const Complex& v : r.lambda_p) {
      CHECK(v.real() <= 1e-10);
      total += v;
    }
    double rates = 0.0;
    for (std::size_t i = 0; i < 4; ++i)
      rates += spec.lambda_plus(i, i) + spec.lambda_minus(i, i);
    CHECK(std::abs(total + rates) < 1e-9);
    CHECK(r.pairing_ok);
    // the pairing partitions all modes into conjugate groups; real modes of
    // odd multiplicity partner with themselves
    Complex partition_sum{};
    for (const auto& [i, j] : r.pairs) {
      REQUIRE(j >= 0);
      partition_sum += r.lambda_p[std::size_t(i)];
      if (j != i) {
        partition_sum += r.lambda_p[std::size_t(j)];
        CHECK(std::abs(r.lambda_p[std::size_t(j)] -
                       std::conj(r.lambda_p[std::size_t(i)])) < 1e-6);
      } else {
        CHECK(std::abs(r.lambda_p[std::size_t(i)].imag()) <= 1e-6);
      }
    }
    CHECK(std::abs(partition_sum - total) < 1e-12);
  }
}

TEST_CASE("pairing marks unmatched values") {
  bool ok = true;
  auto pairs = pair_conjugates({Complex(0.0, 1.0)}, &ok);
  CHECK_FALSE(ok);
  REQUIRE(pairs.size() == 1);
  CHECK(pairs[0].second == -1);

  // a conjugate pair and a double real value pair up fully
  ok = false;
  pairs = pair_conjugates(
      {Complex(-0.5, 0.0), Complex(-0.1, 0.7), Complex(-0.1, -0.7),
       Complex(-0.5, 0.0)},
      &ok);
  CHECK(ok);
  CHECK(pairs.size() == 2);
}

TEST_CASE("decoupled bulk gives zero gap for every size") {
  XYChainParams p;
  p.num_sites = 5;
  p.coupling = 0.0;
  p.anisotropy = 0.0;
  p.field = 0.0;
  p.inject_1 = 0.5;
  p.extract_1 = 0.5;
  p.inject_l = 0.5;
  p.extract_l = 0.5;
  GapScanResult scan = gap_scan(p, {3, 5, 8});
  for (const GapScanRow& row : scan.rows) {
    CHECK(row.ok);
    CHECK(row.gap == 0.0);
  }
  CHECK_FALSE(scan.fit.valid);  // no positive gaps to fit
}

TEST_CASE("power-law fit recovers an exact power law") {
  std::vector<GapScanRow> rows;
  for (std::size_t L : {10, 20, 40, 80}) {
    GapScanRow r;
    r.num_sites = L;
    r.gap = 7.5 / double(L * L * L);
    r.ok = true;
    rows.push_back(r);
  }
  PowerLawFit fit = fit_power_law(rows);
  REQUIRE(fit.valid);
  CHECK(fit.slope == doctest::Approx(-3.0).epsilon(1e-12));
  CHECK(fit.r2 == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("gap scan rows stay ordered and report failures in place") {
  XYChainParams p = ising_unit(2, 0.05);
  GapScanResult scan = gap_scan(p, {4, 6, 8, 10});
  REQUIRE(scan.rows.size() == 4);
  for (std::size_t i = 0; i < 4; ++i) {
    CHECK(scan.rows[i].num_sites == 4 + 2 * i);
    CHECK(scan.rows[i].ok);
    CHECK(scan.rows[i].gap > 0.0);
  }
  CHECK(scan.fit.valid);
}
