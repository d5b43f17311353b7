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

// Timing comparison of the serial reference kernels against the OpenMP
// kernels, plus end-to-end solver timings. The parallel kernels must also
// agree bitwise with the serial ones; this is asserted on every run.

#include <chrono>
#include <cstdio>
#include <random>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "liouvq/eigen_solver.hpp"
#include "liouvq/kernels.hpp"
#include "liouvq/lyapunov.hpp"
#include "liouvq/oracle.hpp"
#include "liouvq/spectrum.hpp"
#include "liouvq/threading.hpp"

using namespace liouvq;
using Clock = std::chrono::steady_clock;

namespace {

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

ComplexMatrix random_matrix(std::mt19937_64& rng, std::size_t n) {
  std::normal_distribution<double> d(0.0, 1.0);
  ComplexMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = Complex(d(rng), d(rng));
  return m;
}

template <typename F>
double time_best_of(int reps, F&& fn) {
  double best = 1e300;
  for (int r = 0; r < reps; ++r) {
    const auto start = Clock::now();
    fn();
    best = std::min(best, seconds_since(start));
  }
  return best;
}

}  // namespace

int main() {
  apply_thread_cap_from_env();
  std::mt19937_64 rng(4242);

  std::printf("threads available: %d\n\n", max_threads());
  std::printf("%-28s %10s %10s %8s\n", "kernel", "serial[s]", "openmp[s]",
              "speedup");

  for (std::size_t n : {128, 256, 384}) {
    ComplexMatrix a = random_matrix(rng, n);
    ComplexMatrix b = random_matrix(rng, n);
    ComplexMatrix ref, par;
    const double ts =
        time_best_of(3, [&] { ref = kernels::serial::matmul(a, b); });
    const double tp = time_best_of(3, [&] { par = kernels::matmul(a, b); });
    if (!(ref == par)) {
      std::fprintf(stderr, "matmul mismatch at n=%zu\n", n);
      return 1;
    }
    std::printf("matmul n=%-19zu %10.4f %10.4f %8.2fx\n", n, ts, tp, ts / tp);
  }

  for (std::size_t n : {32, 64}) {
    ComplexMatrix a = random_matrix(rng, n);
    ComplexMatrix b = random_matrix(rng, n);
    ComplexMatrix ref, par;
    const double ts =
        time_best_of(3, [&] { ref = kernels::serial::kron(a, b); });
    const double tp = time_best_of(3, [&] { par = kernels::kron(a, b); });
    if (!(ref == par)) {
      std::fprintf(stderr, "kron mismatch at n=%zu\n", n);
      return 1;
    }
    std::printf("kron %zux%zu (x) %zux%zu %9.4f %10.4f %8.2fx\n", n, n, n, n,
                ts, tp, ts / tp);
  }

  std::printf("\nend-to-end solves (OpenMP kernels engaged where profitable)\n");
  {
    ComplexMatrix a = random_matrix(rng, 300);
    const double t = time_best_of(2, [&] { (void)eigenvalues(a); });
    std::printf("eigenvalues 300x300            %10.4f s\n", t);
    const double ts = time_best_of(2, [&] { (void)schur_decompose(a); });
    std::printf("schur 300x300                  %10.4f s\n", ts);
  }
  {
    ComplexMatrix a = random_matrix(rng, 120);
    double max_re = -1e300;
    for (const Complex& v : eigenvalues(a)) max_re = std::max(max_re, v.real());
    for (std::size_t i = 0; i < 120; ++i) a(i, i) -= Complex(max_re + 0.5, 0.0);
    ComplexMatrix c = random_matrix(rng, 120);
    const double t = time_best_of(2, [&] { (void)solve_lyapunov(a, c); });
    std::printf("lyapunov solve 120x120         %10.4f s\n", t);
  }
  {
    XYChainParams p;
    p.num_sites = 5;
    p.coupling = 1.0;
    p.anisotropy = 0.4;
    p.field = 0.2;
    p.inject_1 = 0.7;
    p.extract_1 = 0.2;
    p.inject_l = 0.1;
    p.extract_l = 0.8;
    auto spec = xy_chain_spec(p);
    const double t =
        time_best_of(1, [&] { (void)build_superoperator(spec); });
    std::printf("superoperator assembly L=5     %10.4f s\n", t);
  }
  {
    XYChainParams p;
    p.num_sites = 2;
    p.coupling = 1.0;
    p.anisotropy = 1.0;
    p.field = 0.02;
    p.inject_1 = 0.5;
    p.extract_1 = 0.5;
    p.inject_l = 0.5;
    p.extract_l = 0.5;
    const double t = time_best_of(1, [&] {
      (void)gap_scan(p, {20, 40, 60, 80, 100});
    });
    std::printf("gap scan L=20..100             %10.4f s\n", t);
  }
  return 0;
}
