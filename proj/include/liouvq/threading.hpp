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

#pragma once

namespace liouvq {

/// Number of threads the parallel kernels may use. Honors the LIOUVQ_THREADS
/// environment variable as an upper bound on the OpenMP pool.
int max_threads();

/// Apply the LIOUVQ_THREADS cap to the OpenMP runtime. Called once by the CLI
/// and the benchmark; library code only reads the ambient setting.
void apply_thread_cap_from_env();

}  // namespace liouvq
