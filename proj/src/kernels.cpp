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

#include "liouvq/kernels.hpp"

#include <cstdint>

namespace liouvq {
namespace kernels {

namespace {

// Below this many scalar multiply-adds the OpenMP fork/join overhead wins.
constexpr std::uint64_t kParallelWorkThreshold = 1u << 20;

void require_multipliable(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.cols() != b.rows())
    throw Error(ErrorCode::DimensionMismatch, "matmul: inner dimensions differ");
}

// One output row of C = A * B; identical arithmetic order in both kernels.
inline void matmul_row(const ComplexMatrix& a, const ComplexMatrix& b,
                       ComplexMatrix& c, std::size_t i) {
  const std::size_t n = b.cols();
  const std::size_t k = a.cols();
  Complex* ci = c.row(i);
  for (std::size_t l = 0; l < k; ++l) {
    const Complex ail = a(i, l);
    if (ail == Complex{}) continue;
    const Complex* bl = b.row(l);
    for (std::size_t j = 0; j < n; ++j) ci[j] += ail * bl[j];
  }
}

inline void kron_tile(const ComplexMatrix& a, const ComplexMatrix& b,
                      ComplexMatrix& out, std::size_t ia) {
  const std::size_t br = b.rows();
  const std::size_t bc = b.cols();
  for (std::size_t ja = 0; ja < a.cols(); ++ja) {
    const Complex f = a(ia, ja);
    for (std::size_t ib = 0; ib < br; ++ib)
      for (std::size_t jb = 0; jb < bc; ++jb)
        out(ia * br + ib, ja * bc + jb) = f * b(ib, jb);
  }
}

}  // namespace

namespace serial {

ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_multipliable(a, b);
  ComplexMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) matmul_row(a, b, c, i);
  return c;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t ia = 0; ia < a.rows(); ++ia) kron_tile(a, b, out, ia);
  return out;
}

std::vector<Complex> matvec(const ComplexMatrix& a,
                            const std::vector<Complex>& x) {
  if (a.cols() != x.size())
    throw Error(ErrorCode::DimensionMismatch, "matvec: size mismatch");
  std::vector<Complex> y(a.rows(), Complex{});
  for (std::size_t i = 0; i < a.rows(); ++i) {
    Complex s{};
    const Complex* ai = a.row(i);
    for (std::size_t j = 0; j < x.size(); ++j) s += ai[j] * x[j];
    y[i] = s;
  }
  return y;
}

}  // namespace serial

ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_multipliable(a, b);
  ComplexMatrix c(a.rows(), b.cols());
  [[maybe_unused]] const std::uint64_t work =
      std::uint64_t(a.rows()) * a.cols() * b.cols();
  const std::int64_t nrows = std::int64_t(a.rows());
#pragma omp parallel for schedule(static) if (work >= kParallelWorkThreshold)
  for (std::int64_t i = 0; i < nrows; ++i)
    matmul_row(a, b, c, std::size_t(i));
  return c;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  [[maybe_unused]] const std::uint64_t work = std::uint64_t(out.rows()) * out.cols();
  const std::int64_t nrows = std::int64_t(a.rows());
#pragma omp parallel for schedule(static) if (work >= kParallelWorkThreshold)
  for (std::int64_t ia = 0; ia < nrows; ++ia)
    kron_tile(a, b, out, std::size_t(ia));
  return out;
}

std::vector<Complex> matvec(const ComplexMatrix& a,
                            const std::vector<Complex>& x) {
  if (a.cols() != x.size())
    throw Error(ErrorCode::DimensionMismatch, "matvec: size mismatch");
  std::vector<Complex> y(a.rows(), Complex{});
  [[maybe_unused]] const std::uint64_t work = std::uint64_t(a.rows()) * a.cols();
  const std::int64_t nrows = std::int64_t(a.rows());
#pragma omp parallel for schedule(static) if (work >= kParallelWorkThreshold)
  for (std::int64_t i = 0; i < nrows; ++i) {
    Complex s{};
    const Complex* ai = a.row(std::size_t(i));
    for (std::size_t j = 0; j < x.size(); ++j) s += ai[j] * x[j];
    y[std::size_t(i)] = s;
  }
  return y;
}

}  // namespace kernels
}  // namespace liouvq
