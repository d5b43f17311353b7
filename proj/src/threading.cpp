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

#include "liouvq/threading.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace liouvq {

namespace {

int env_thread_cap() {
  const char* raw = std::getenv("LIOUVQ_THREADS");
  if (raw == nullptr) return 0;
  try {
    int v = std::stoi(std::string(raw));
    return v > 0 ? v : 0;
  } catch (...) {
    return 0;
  }
}

}  // namespace

int max_threads() {
#ifdef _OPENMP
  int n = omp_get_max_threads();
#else
  int n = 1;
#endif
  int cap = env_thread_cap();
  if (cap > 0) n = std::min(n, cap);
  return n;
}

void apply_thread_cap_from_env() {
#ifdef _OPENMP
  int cap = env_thread_cap();
  if (cap > 0 && cap < omp_get_max_threads()) omp_set_num_threads(cap);
#endif
}

}  // namespace liouvq
