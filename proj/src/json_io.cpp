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

#include "liouvq/json_io.hpp"

#include <fstream>

namespace liouvq {

namespace {

Json real_parts(const std::vector<Complex>& v) {
  Json out = Json::array();
  for (const Complex& c : v) out.push_back(c.real());
  return out;
}

Json imag_parts(const std::vector<Complex>& v) {
  Json out = Json::array();
  for (const Complex& c : v) out.push_back(c.imag());
  return out;
}

std::vector<double> doubles_from(const Json& j, const char* key,
                                 std::size_t expected) {
  if (!j.contains(key))
    throw Error(ErrorCode::IoError, std::string("missing key '") + key + "'");
  std::vector<double> out = j.at(key).get<std::vector<double>>();
  if (out.size() != expected)
    throw Error(ErrorCode::IoError,
                std::string("key '") + key + "' has wrong length");
  return out;
}

}  // namespace

Json matrix_to_json(const ComplexMatrix& m) {
  Json re = Json::array();
  Json im = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      re.push_back(m(i, j).real());
      im.push_back(m(i, j).imag());
    }
  return Json{{"rows", m.rows()}, {"cols", m.cols()}, {"re", re}, {"im", im}};
}

ComplexMatrix matrix_from_json(const Json& j) {
  const std::size_t rows = j.at("rows").get<std::size_t>();
  const std::size_t cols = j.at("cols").get<std::size_t>();
  const std::vector<double> re = doubles_from(j, "re", rows * cols);
  const std::vector<double> im = doubles_from(j, "im", rows * cols);
  ComplexMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t k = 0; k < cols; ++k)
      m(i, k) = Complex(re[i * cols + k], im[i * cols + k]);
  return m;
}

Json spec_to_json(const QuadraticLindbladSpec& spec) {
  const std::size_t n = spec.num_sites;
  Json h_re = Json::array(), h_im = Json::array();
  Json g_re = Json::array(), g_im = Json::array();
  Json lp = Json::array(), lm = Json::array();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      h_re.push_back(spec.h(i, j).real());
      h_im.push_back(spec.h(i, j).imag());
      g_re.push_back(spec.g(i, j).real());
      g_im.push_back(spec.g(i, j).imag());
      lp.push_back(spec.lambda_plus(i, j));
      lm.push_back(spec.lambda_minus(i, j));
    }
  return Json{{"L", n},           {"h_re", h_re},        {"h_im", h_im},
              {"g_re", g_re},     {"g_im", g_im},        {"lambda_plus", lp},
              {"lambda_minus", lm}};
}

QuadraticLindbladSpec spec_from_json(const Json& j) {
  QuadraticLindbladSpec spec;
  spec.num_sites = j.at("L").get<std::size_t>();
  const std::size_t n = spec.num_sites;
  const auto h_re = doubles_from(j, "h_re", n * n);
  const auto h_im = doubles_from(j, "h_im", n * n);
  const auto g_re = doubles_from(j, "g_re", n * n);
  const auto g_im = doubles_from(j, "g_im", n * n);
  const auto lp = doubles_from(j, "lambda_plus", n * n);
  const auto lm = doubles_from(j, "lambda_minus", n * n);
  spec.h = ComplexMatrix(n, n);
  spec.g = ComplexMatrix(n, n);
  spec.lambda_plus = RealMatrix(n, n);
  spec.lambda_minus = RealMatrix(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      spec.h(i, k) = Complex(h_re[i * n + k], h_im[i * n + k]);
      spec.g(i, k) = Complex(g_re[i * n + k], g_im[i * n + k]);
      spec.lambda_plus(i, k) = lp[i * n + k];
      spec.lambda_minus(i, k) = lm[i * n + k];
    }
  return spec;
}

Json params_to_json(const XYChainParams& p) {
  return Json{{"L", p.num_sites}, {"J", p.coupling}, {"gamma", p.anisotropy},
              {"hz", p.field},    {"lp1", p.inject_1}, {"lm1", p.extract_1},
              {"lpL", p.inject_l}, {"lmL", p.extract_l}};
}

XYChainParams params_from_json(const Json& j) {
  XYChainParams p;
  p.num_sites = j.at("L").get<std::size_t>();
  p.coupling = j.at("J").get<double>();
  p.anisotropy = j.at("gamma").get<double>();
  p.field = j.at("hz").get<double>();
  p.inject_1 = j.at("lp1").get<double>();
  p.extract_1 = j.at("lm1").get<double>();
  p.inject_l = j.at("lpL").get<double>();
  p.extract_l = j.at("lmL").get<double>();
  return p;
}

Json spectrum_to_json(const SpectrumResult& r) {
  Json pairs = Json::array();
  for (const auto& [i, j] : r.pairs) pairs.push_back(Json::array({i, j}));
  return Json{{"L", r.lambda_p.size() / 2},
              {"lambda_re", real_parts(r.lambda_p)},
              {"lambda_im", imag_parts(r.lambda_p)},
              {"rapidity_re", real_parts(r.rapidities)},
              {"rapidity_im", imag_parts(r.rapidities)},
              {"pairs", pairs},
              {"pairing_ok", r.pairing_ok},
              {"gap", r.gap},
              {"residual", r.residual}};
}

Json steady_state_to_json(const SteadyState& s) {
  const std::size_t n = s.occupations.size();
  Json pr = Json::array(), pi = Json::array();
  for (std::size_t i = 0; i < n; ++i) {
    Json row_r = Json::array(), row_i = Json::array();
    for (std::size_t j = 0; j < n; ++j) {
      row_r.push_back(s.pairings(i, j).real());
      row_i.push_back(s.pairings(i, j).imag());
    }
    pr.push_back(row_r);
    pi.push_back(row_i);
  }
  return Json{{"occupations", s.occupations},
              {"magnetization_z", s.magnetization_z},
              {"pairing_re", pr},
              {"pairing_im", pi},
              {"residual", s.residual}};
}

Json oracle_report_to_json(const OracleReport& r) {
  Json membership = Json::array();
  for (const RapidityMatch& m : r.rapidity_membership)
    membership.push_back(Json{{"re", m.predicted.real()},
                              {"im", m.predicted.imag()},
                              {"matched", m.matched},
                              {"distance", m.distance}});
  Json out{{"superop_spectrum_re", real_parts(r.superop_spectrum)},
           {"superop_spectrum_im", imag_parts(r.superop_spectrum)},
           {"ness_residual", r.ness_residual},
           {"rapidity_membership", membership},
           {"ness_unique", r.ness_unique}};
  if (std::isnan(r.correlation_diff))
    out["correlation_diff"] = nullptr;
  else
    out["correlation_diff"] = r.correlation_diff;
  return out;
}

Json gap_scan_to_json(const GapScanResult& r) {
  Json rows = Json::array();
  for (const GapScanRow& row : r.rows) {
    Json jr{{"L", row.num_sites}, {"gap", row.gap}, {"ok", row.ok}};
    if (!row.ok) jr["error"] = row.error;
    rows.push_back(jr);
  }
  Json fit;
  if (r.fit.valid)
    fit = Json{{"slope", r.fit.slope},
               {"intercept", r.fit.intercept},
               {"r2", r.fit.r2},
               {"points", r.fit.points}};
  else
    fit = Json{{"slope", nullptr}, {"intercept", nullptr}, {"r2", nullptr},
               {"points", r.fit.points}};
  return Json{{"rows", rows}, {"fit", fit}};
}

Json secular_roots_to_json(const std::vector<SecularRoot>& roots) {
  Json out = Json::array();
  for (const SecularRoot& r : roots)
    out.push_back(Json{{"theta_re", r.theta.real()},
                       {"theta_im", r.theta.imag()},
                       {"lambda_re", r.lambda.real()},
                       {"lambda_im", r.lambda.imag()},
                       {"branch", r.branch},
                       {"residuals",
                        Json{{"det", r.det_residual},
                             {"charpoly", r.charpoly_residual}}}});
  return out;
}

Json structure_to_json(const StructureMatrices& s) {
  return Json{{"bar_p", matrix_to_json(s.bar_p)},
              {"p", matrix_to_json(s.p)},
              {"m", matrix_to_json(s.m)},
              {"j_block", matrix_to_json(s.j_block)},
              {"g", matrix_to_json(s.g)},
              {"x", matrix_to_json(s.x)},
              {"y", matrix_to_json(s.y)},
              {"z", matrix_to_json(s.z)},
              {"k_plus", matrix_to_json(s.k_plus)},
              {"k_minus", matrix_to_json(s.k_minus)}};
}

QuadraticLindbladSpec load_spec_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::IoError, "cannot open spec file " + path);
  Json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    throw Error(ErrorCode::IoError,
                "cannot parse spec file " + path + ": " + e.what());
  }
  return spec_from_json(j);
}

}  // namespace liouvq
