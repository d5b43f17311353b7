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

#include "liouvq/fig_data.hpp"

#include <algorithm>
#include <filesystem>
#include <sstream>

#include "liouvq/csv.hpp"
#include "liouvq/spectrum.hpp"

namespace liouvq {

namespace {

XYChainParams ising_params(double coupling, double field_ratio,
                           std::size_t num_sites) {
  XYChainParams p;
  p.num_sites = num_sites;
  p.coupling = coupling;
  p.anisotropy = 1.0;
  p.field = field_ratio * coupling;
  p.inject_1 = p.extract_1 = 0.5;  // Gamma_1 = 1
  p.inject_l = p.extract_l = 0.5;  // Gamma_L = 1
  return p;
}

}  // namespace

std::vector<Complex> near_resonant_modes(const std::vector<Complex>& lambda,
                                         double coupling, double radius) {
  const Complex target(0.0, coupling);
  std::vector<Complex> out;
  for (const Complex& v : lambda)
    if (v.imag() > 0.0 && std::abs(v - target) <= radius * std::abs(coupling))
      out.push_back(v);
  std::sort(out.begin(), out.end(), [](const Complex& a, const Complex& b) {
    if (a.real() != b.real()) return a.real() < b.real();
    return a.imag() < b.imag();
  });
  return out;
}

Fig1Contents make_fig1_data(const Fig1Options& opts) {
  Fig1Contents out;

  {
    std::ostringstream csv;
    csv << "hz,L,gap\n";
    for (double field : opts.fields) {
      XYChainParams tmpl = ising_params(opts.coupling, field, 2);
      GapScanResult scan = gap_scan(tmpl, opts.gap_sizes);
      for (const GapScanRow& row : scan.rows) {
        if (!row.ok)
          throw Error(ErrorCode::NoConvergence,
                      "gap scan failed at L = " + std::to_string(row.num_sites) +
                          ": " + row.error);
        csv << format_full(field * opts.coupling) << ',' << row.num_sites << ','
            << format_full(row.gap) << '\n';
      }
    }
    out.gap_csv = csv.str();
  }

  {
    std::ostringstream csv;
    csv << "L,lambda_re,lambda_im\n";
    for (std::size_t size : opts.scatter_sizes) {
      const auto lambda = normal_mode_values(
          xy_chain_spec(ising_params(opts.coupling, opts.scatter_field, size)));
      for (const Complex& v :
           near_resonant_modes(lambda, opts.coupling, opts.scatter_radius))
        csv << size << ',' << format_full(v.real()) << ','
            << format_full(v.imag()) << '\n';
    }
    out.size_csv = csv.str();
  }

  {
    std::ostringstream csv;
    csv << "hz,lambda_re,lambda_im\n";
    for (double field : opts.fields) {
      const auto lambda = normal_mode_values(
          xy_chain_spec(ising_params(opts.coupling, field, opts.scatter_size)));
      for (const Complex& v :
           near_resonant_modes(lambda, opts.coupling, opts.scatter_radius))
        csv << format_full(field * opts.coupling) << ','
            << format_full(v.real()) << ',' << format_full(v.imag()) << '\n';
    }
    out.field_csv = csv.str();
  }

  return out;
}

std::vector<std::string> write_fig1_files(const std::string& directory,
                                          const Fig1Options& opts) {
  const Fig1Contents data = make_fig1_data(opts);
  std::filesystem::create_directories(directory);
  const std::filesystem::path dir(directory);
  const std::string a = (dir / "fig1a.csv").string();
  const std::string b = (dir / "fig1b.csv").string();
  const std::string c = (dir / "fig1c.csv").string();
  write_file_atomic(a, data.gap_csv);
  write_file_atomic(b, data.size_csv);
  write_file_atomic(c, data.field_csv);
  return {a, b, c};
}

}  // namespace liouvq
