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

#include <json.hpp>

#include "liouvq/analytic.hpp"
#include "liouvq/model.hpp"
#include "liouvq/oracle.hpp"
#include "liouvq/spectrum.hpp"
#include "liouvq/steady_state.hpp"
#include "liouvq/structure.hpp"

namespace liouvq {

using Json = nlohmann::json;

// Matrices travel as {rows, cols, re[], im[]} with row-major arrays.
Json matrix_to_json(const ComplexMatrix& m);
ComplexMatrix matrix_from_json(const Json& j);

// Spec files: {L, h_re, h_im, g_re, g_im, lambda_plus, lambda_minus}.
Json spec_to_json(const QuadraticLindbladSpec& spec);
QuadraticLindbladSpec spec_from_json(const Json& j);

// Chain parameters: {L, J, gamma, hz, lp1, lm1, lpL, lmL}.
Json params_to_json(const XYChainParams& params);
XYChainParams params_from_json(const Json& j);

Json spectrum_to_json(const SpectrumResult& result);
Json steady_state_to_json(const SteadyState& state);
Json oracle_report_to_json(const OracleReport& report);
Json gap_scan_to_json(const GapScanResult& result);
Json secular_roots_to_json(const std::vector<SecularRoot>& roots);
Json structure_to_json(const StructureMatrices& s);

QuadraticLindbladSpec load_spec_file(const std::string& path);

}  // namespace liouvq
