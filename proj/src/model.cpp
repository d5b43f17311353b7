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

#include "liouvq/model.hpp"

#include <cmath>
#include <sstream>

#include "liouvq/eigen_solver.hpp"

namespace liouvq {

namespace {

constexpr double kTol = 1e-12;

double hermiticity_violation(const ComplexMatrix& m) {
  double worst = 0.0;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = i; j < m.cols(); ++j)
      worst = std::max(worst, std::abs(m(i, j) - std::conj(m(j, i))));
  return worst;
}

double antisymmetry_violation(const ComplexMatrix& m) {
  double worst = 0.0;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = i; j < m.cols(); ++j)
      worst = std::max(worst, std::abs(m(i, j) + m(j, i)));
  return worst;
}

double symmetry_violation(const RealMatrix& m) {
  double worst = 0.0;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = i + 1; j < m.cols(); ++j)
      worst = std::max(worst, std::abs(m(i, j) - m(j, i)));
  return worst;
}

// Most negative eigenvalue of a real symmetric matrix, or 0 when PSD.
double negativity(const RealMatrix& m) {
  if (m.rows() == 0) return 0.0;
  bool diagonal = true;
  for (std::size_t i = 0; i < m.rows() && diagonal; ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (i != j && m(i, j) != 0.0) {
        diagonal = false;
        break;
      }
  double most_negative = 0.0;
  if (diagonal) {
    for (std::size_t i = 0; i < m.rows(); ++i)
      most_negative = std::min(most_negative, m(i, i));
  } else {
    for (const Complex& v : eigenvalues(to_complex(m)))
      most_negative = std::min(most_negative, v.real());
  }
  return -most_negative;
}

}  // namespace

bool check_spec(const QuadraticLindbladSpec& spec, SpecViolation* out) {
  const std::size_t n = spec.num_sites;
  auto fail = [&](ErrorCode code, const std::string& what, double mag) {
    if (out != nullptr) *out = SpecViolation{code, what, mag};
    return false;
  };

  if (n == 0)
    return fail(ErrorCode::DimensionMismatch, "L must be positive", 0.0);
  if (spec.h.rows() != n || spec.h.cols() != n || spec.g.rows() != n ||
      spec.g.cols() != n || spec.lambda_plus.rows() != n ||
      spec.lambda_plus.cols() != n || spec.lambda_minus.rows() != n ||
      spec.lambda_minus.cols() != n)
    return fail(ErrorCode::DimensionMismatch, "all matrices must be LxL", 0.0);

  if (double v = hermiticity_violation(spec.h); v > kTol)
    return fail(ErrorCode::NotHermitian, "h = h^dagger", v);
  if (double v = antisymmetry_violation(spec.g); v > kTol)
    return fail(ErrorCode::NotAntisymmetric, "g^t = -g", v);
  if (double v = std::max(symmetry_violation(spec.lambda_plus),
                          symmetry_violation(spec.lambda_minus));
      v > kTol)
    return fail(ErrorCode::NegativeRateMatrix,
                "lambda matrices must be symmetric", v);
  if (double v = negativity(spec.lambda_plus); v > kTol)
    return fail(ErrorCode::NegativeRateMatrix,
                "lambda_plus eigenvalues >= 0", v);
  if (double v = negativity(spec.lambda_minus); v > kTol)
    return fail(ErrorCode::NegativeRateMatrix,
                "lambda_minus eigenvalues >= 0", v);
  return true;
}

const QuadraticLindbladSpec& validate_spec(const QuadraticLindbladSpec& spec) {
  SpecViolation v;
  if (!check_spec(spec, &v)) {
    std::ostringstream msg;
    msg << "invariant '" << v.invariant << "' violated by " << v.magnitude;
    throw Error(v.code, msg.str());
  }
  return spec;
}

void validate_params(const XYChainParams& p) {
  if (p.num_sites < 2)
    throw Error(ErrorCode::InvalidParams, "XY chain needs L >= 2");
  if (p.inject_1 < 0.0 || p.extract_1 < 0.0 || p.inject_l < 0.0 ||
      p.extract_l < 0.0)
    throw Error(ErrorCode::InvalidParams, "rates must be non-negative");
  if (!(std::abs(p.anisotropy) <= 1.0))
    throw Error(ErrorCode::InvalidParams, "anisotropy must lie in [-1, 1]");
  if (!std::isfinite(p.coupling) || !std::isfinite(p.field))
    throw Error(ErrorCode::InvalidParams, "coupling and field must be finite");
}

QuadraticLindbladSpec xy_chain_spec(const XYChainParams& p) {
  validate_params(p);
  const std::size_t n = p.num_sites;

  QuadraticLindbladSpec spec;
  spec.num_sites = n;
  spec.h = ComplexMatrix(n, n);
  spec.g = ComplexMatrix(n, n);
  spec.lambda_plus = RealMatrix(n, n);
  spec.lambda_minus = RealMatrix(n, n);

  for (std::size_t l = 0; l < n; ++l) spec.h(l, l) = 2.0 * p.field;
  for (std::size_t l = 0; l + 1 < n; ++l) {
    spec.h(l, l + 1) = p.coupling;
    spec.h(l + 1, l) = p.coupling;
    spec.g(l, l + 1) = p.coupling * p.anisotropy;
    spec.g(l + 1, l) = -p.coupling * p.anisotropy;
  }
  spec.lambda_plus(0, 0) = p.inject_1;
  spec.lambda_plus(n - 1, n - 1) = p.inject_l;
  spec.lambda_minus(0, 0) = p.extract_1;
  spec.lambda_minus(n - 1, n - 1) = p.extract_l;
  return spec;
}

}  // namespace liouvq
