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

#include <string>

namespace liouvq {

/// Shortest representation that still round-trips a double exactly
/// (17 significant digits).
std::string format_full(double value);

/// Write a whole file through a temporary and an atomic rename so failures
/// never leave partial output behind.
void write_file_atomic(const std::string& path, const std::string& contents);

}  // namespace liouvq
