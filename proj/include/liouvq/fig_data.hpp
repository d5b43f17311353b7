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
#include <vector>

#include "liouvq/matrix.hpp"

namespace liouvq {

/// Gap-versus-size and near-resonant mode scatter data for the Ising-chain
/// benchmark family (gamma = 1, unit boundary rates). Output is plain CSV at
/// full double precision; repeated runs are byte-identical.
struct Fig1Options {
  double coupling = 1.0;
  std::vector<double> fields = {0.01, 0.02, 0.03};       // h_z / J
  std::vector<std::size_t> gap_sizes = {20, 30, 40, 50, 60, 70, 80, 90, 100};
  std::vector<std::size_t> scatter_sizes = {50, 75, 100};
  double scatter_field = 0.01;
  std::size_t scatter_size = 100;
  double scatter_radius = 0.1;  // keep modes with |lambda - iJ| <= radius * J
};

struct Fig1Contents {
  std::string gap_csv;      // hz,L,gap
  std::string size_csv;     // L,lambda_re,lambda_im
  std::string field_csv;    // hz,lambda_re,lambda_im
};

Fig1Contents make_fig1_data(const Fig1Options& opts);

/// Render the three CSV files into a directory (created if missing):
/// fig1a.csv, fig1b.csv, fig1c.csv. Returns the file paths.
std::vector<std::string> write_fig1_files(const std::string& directory,
                                          const Fig1Options& opts);

/// Modes with positive imaginary part within the scatter radius of +iJ,
/// sorted by (Re, Im).
std::vector<Complex> near_resonant_modes(const std::vector<Complex>& lambda,
                                         double coupling, double radius);

}  // namespace liouvq
