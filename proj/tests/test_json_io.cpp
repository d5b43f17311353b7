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

#include <fstream>

#include "liouvq/csv.hpp"
#include "liouvq/json_io.hpp"
#include "support/test_utils.hpp"

using namespace liouvq;

TEST_CASE("spec serialization round trip is exact") {
  std::mt19937_64 rng(107);
  auto spec = liouvq::testing::random_spec(rng, 3);
  Json j = spec_to_json(spec);
  for (const char* key : {"L", "h_re", "h_im", "g_re", "g_im", "lambda_plus",
                          "lambda_minus"})
    CHECK(j.contains(key));
  auto back = spec_from_json(j);
  CHECK(back.h == spec.h);
  CHECK(back.g == spec.g);
  CHECK(back.lambda_plus == spec.lambda_plus);
  CHECK(back.lambda_minus == spec.lambda_minus);
}

TEST_CASE("params round trip") {
  XYChainParams p;
  p.num_sites = 17;
  p.coupling = 0.123456789012345678;
  p.anisotropy = -0.25;
  p.field = 1e-3;
  p.inject_1 = 0.4;
  p.extract_1 = 0.1;
  p.inject_l = 0.0;
  p.extract_l = 2.5;
  Json j = params_to_json(p);
  auto back = params_from_json(j);
  CHECK(back.num_sites == p.num_sites);
  CHECK(back.coupling == p.coupling);
  CHECK(back.anisotropy == p.anisotropy);
  CHECK(back.field == p.field);
  CHECK(back.extract_l == p.extract_l);
}

TEST_CASE("matrix schema round trip") {
  std::mt19937_64 rng(109);
  ComplexMatrix m = liouvq::testing::random_complex(rng, 4);
  Json j = matrix_to_json(m);
  CHECK(j.at("rows") == 4);
  CHECK(j.at("cols") == 4);
  CHECK(j.at("re").size() == 16);
  CHECK(matrix_from_json(j) == m);
}

TEST_CASE("missing or malformed keys raise IoError") {
  Json j = Json{{"L", 2}};
  CHECK_THROWS_AS((void)spec_from_json(j), Error);
  CHECK_THROWS_AS((void)load_spec_file("/nonexistent/path.json"), Error);
}

TEST_CASE("spec file loading") {
  std::mt19937_64 rng(113);
  auto spec = liouvq::testing::random_spec(rng, 2);
  const std::string path = "test_spec_roundtrip.json";
  {
    std::ofstream out(path);
    out << spec_to_json(spec).dump(2);
  }
  auto back = load_spec_file(path);
  CHECK(back.h == spec.h);
  std::remove(path.c_str());
}

TEST_CASE("report serializers expose the documented fields") {
  XYChainParams p;
  p.num_sites = 3;
  p.coupling = 1.0;
  p.anisotropy = 0.0;
  p.field = 0.0;
  p.inject_1 = 0.3;
  p.extract_1 = 0.7;
  p.inject_l = 0.3;
  p.extract_l = 0.7;
  auto spec = xy_chain_spec(p);

  Json spectrum = spectrum_to_json(rapidities(spec));
  for (const char* key : {"lambda_re", "lambda_im", "rapidity_re",
                          "rapidity_im", "pairs", "gap", "residual"})
    CHECK(spectrum.contains(key));

  Json ness = steady_state_to_json(observables(spec));
  for (const char* key : {"occupations", "magnetization_z", "pairing_re",
                          "pairing_im", "residual"})
    CHECK(ness.contains(key));
  CHECK(ness.at("pairing_re").size() == 3);
  CHECK(ness.at("pairing_re").at(0).size() == 3);

  auto roots = solve_secular(secular_params(p, Sign::plus));
  Json rj = secular_roots_to_json(roots);
  REQUIRE(rj.size() == 3);
  for (const char* key : {"theta_re", "theta_im", "lambda_re", "lambda_im",
                          "branch", "residuals"})
    CHECK(rj.at(0).contains(key));
}

TEST_CASE("full-precision formatting round trips doubles") {
  for (double v : {1.0 / 3.0, 6.02214076e23, -7.2e-31, 0.1, 123456.789}) {
    const std::string s = format_full(v);
    CHECK(std::stod(s) == v);
  }
}
