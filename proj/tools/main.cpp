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

#include <CLI11.hpp>
#include <cstdio>
#include <string>
#include <vector>

#include "liouvq/analytic.hpp"
#include "liouvq/csv.hpp"
#include "liouvq/fig_data.hpp"
#include "liouvq/json_io.hpp"
#include "liouvq/oracle.hpp"
#include "liouvq/spectrum.hpp"
#include "liouvq/steady_state.hpp"
#include "liouvq/threading.hpp"

namespace {

using namespace liouvq;

constexpr int kExitOk = 0;
constexpr int kExitNumerical = 3;

struct ChainOptions {
  std::size_t num_sites = 4;
  double coupling = 1.0;
  double anisotropy = 1.0;
  double field = 0.0;
  double gamma_1 = -1.0;  // shorthand: split evenly unless rates given
  double gamma_l = -1.0;
  double inject_1 = -1.0;
  double extract_1 = -1.0;
  double inject_l = -1.0;
  double extract_l = -1.0;
  std::string spec_path;
};

void add_chain_options(CLI::App* cmd, ChainOptions* opts,
                       bool with_anisotropy = true) {
  cmd->fallthrough();
  cmd->add_option("--L", opts->num_sites, "number of sites");
  cmd->add_option("--J", opts->coupling, "coupling strength");
  if (with_anisotropy)
    cmd->add_option("--gamma", opts->anisotropy, "anisotropy in [-1, 1]");
  cmd->add_option("--hz", opts->field, "transverse field");
  cmd->add_option("--g1", opts->gamma_1,
                  "total rate at site 1 (split evenly unless --lp1/--lm1)");
  cmd->add_option("--gL", opts->gamma_l,
                  "total rate at site L (split evenly unless --lpL/--lmL)");
  cmd->add_option("--lp1", opts->inject_1, "injection rate at site 1");
  cmd->add_option("--lm1", opts->extract_1, "extraction rate at site 1");
  cmd->add_option("--lpL", opts->inject_l, "injection rate at site L");
  cmd->add_option("--lmL", opts->extract_l, "extraction rate at site L");
  cmd->add_option("--spec", opts->spec_path,
                  "JSON spec file overriding the chain parameters");
}

XYChainParams chain_params(const ChainOptions& o) {
  XYChainParams p;
  p.num_sites = o.num_sites;
  p.coupling = o.coupling;
  p.anisotropy = o.anisotropy;
  p.field = o.field;
  p.inject_1 = o.inject_1 >= 0.0   ? o.inject_1
               : o.gamma_1 >= 0.0 ? o.gamma_1 / 2.0
                                  : 0.0;
  p.extract_1 = o.extract_1 >= 0.0  ? o.extract_1
                : o.gamma_1 >= 0.0 ? o.gamma_1 / 2.0
                                   : 0.0;
  p.inject_l = o.inject_l >= 0.0   ? o.inject_l
               : o.gamma_l >= 0.0 ? o.gamma_l / 2.0
                                  : 0.0;
  p.extract_l = o.extract_l >= 0.0  ? o.extract_l
                : o.gamma_l >= 0.0 ? o.gamma_l / 2.0
                                   : 0.0;
  return p;
}

QuadraticLindbladSpec resolve_spec(const ChainOptions& o) {
  if (!o.spec_path.empty()) return load_spec_file(o.spec_path);
  return xy_chain_spec(chain_params(o));
}

void emit(const std::string& output, const std::string& contents) {
  if (output.empty() || output == "-") {
    std::fputs(contents.c_str(), stdout);
  } else {
    write_file_atomic(output, contents);
  }
}

void emit_json(const std::string& output, const Json& j) {
  emit(output, j.dump(2) + "\n");
}

Json complex_arrays(const std::vector<Complex>& vs, const char* re_key,
                    const char* im_key) {
  Json re = Json::array(), im = Json::array();
  for (const Complex& v : vs) {
    re.push_back(v.real());
    im.push_back(v.imag());
  }
  return Json{{re_key, re}, {im_key, im}};
}

}  // namespace

int main(int argc, char** argv) {
  apply_thread_cap_from_env();

  CLI::App app{"boundary-driven quadratic Lindbladian solver"};
  app.require_subcommand(1);

  std::string output = "-";
  app.add_option("-o,--output", output, "output path (default stdout)")
      ->capture_default_str();

  ChainOptions spectrum_opts;
  std::string dump_structure_path;
  CLI::App* spectrum_cmd = app.add_subcommand(
      "spectrum", "normal-mode eigenvalues, rapidities and relaxation gap");
  add_chain_options(spectrum_cmd, &spectrum_opts);
  spectrum_cmd->add_option("--dump-structure", dump_structure_path,
                           "also write every structure matrix as JSON");

  ChainOptions scan_opts;
  std::size_t scan_lmin = 20, scan_lmax = 100, scan_lstep = 10;
  std::string scan_format = "csv";
  std::string scan_summary_path;
  CLI::App* scan_cmd = app.add_subcommand(
      "gap-scan", "relaxation gap versus chain length with a power-law fit");
  add_chain_options(scan_cmd, &scan_opts);
  scan_cmd->add_option("--Lmin", scan_lmin, "smallest chain length");
  scan_cmd->add_option("--Lmax", scan_lmax, "largest chain length");
  scan_cmd->add_option("--Lstep", scan_lstep, "chain length stride");
  scan_cmd->add_option("--format", scan_format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));
  scan_cmd->add_option("--summary", scan_summary_path,
                       "write the fit summary JSON to this path");

  ChainOptions ness_opts;
  CLI::App* ness_cmd = app.add_subcommand(
      "ness", "steady-state occupations, pairings and magnetization");
  add_chain_options(ness_cmd, &ness_opts);

  ChainOptions analytic_opts;
  std::string analytic_sign = "both";
  CLI::App* analytic_cmd = app.add_subcommand(
      "analytic", "secular-equation roots of the reduced matrices");
  add_chain_options(analytic_cmd, &analytic_opts);
  analytic_cmd->add_option("--sign", analytic_sign, "+, - or both")
      ->check(CLI::IsMember({"+", "-", "both"}));

  ChainOptions ising_opts;
  ising_opts.anisotropy = 1.0;
  CLI::App* ising_cmd = app.add_subcommand(
      "ising", "closed-form spectrum of the unit-anisotropy chain");
  add_chain_options(ising_cmd, &ising_opts, /*with_anisotropy=*/false);

  ChainOptions oracle_opts;
  CLI::App* oracle_cmd = app.add_subcommand(
      "oracle-check", "brute-force Fock-space cross-check for small chains");
  add_chain_options(oracle_cmd, &oracle_opts);

  std::string fig1_dir = ".";
  CLI::App* fig1_cmd = app.add_subcommand(
      "fig1", "regenerate the gap-scaling and mode-cluster CSV data set");
  fig1_cmd->fallthrough();
  fig1_cmd->add_option("--outdir", fig1_dir, "output directory")
      ->capture_default_str();

  // exit codes: 0 ok, 2 usage, 3 numerical failure
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : 2;
  }

  try {
    if (spectrum_cmd->parsed()) {
      auto spec = resolve_spec(spectrum_opts);
      SpectrumResult r = rapidities(spec);
      emit_json(output, spectrum_to_json(r));
      if (!dump_structure_path.empty())
        write_file_atomic(
            dump_structure_path,
            structure_to_json(build_structure(spec)).dump(2) + "\n");
    } else if (scan_cmd->parsed()) {
      if (scan_lmin < 2 || scan_lmax < scan_lmin || scan_lstep == 0)
        throw Error(ErrorCode::InvalidParams,
                    "need 2 <= Lmin <= Lmax and Lstep > 0");
      std::vector<std::size_t> sizes;
      for (std::size_t n = scan_lmin; n <= scan_lmax; n += scan_lstep)
        sizes.push_back(n);
      GapScanResult scan = gap_scan(chain_params(scan_opts), sizes);
      for (const GapScanRow& row : scan.rows)
        if (!row.ok)
          throw Error(ErrorCode::NoConvergence,
                      "gap scan failed at L = " +
                          std::to_string(row.num_sites) + ": " + row.error);
      if (scan_format == "csv") {
        std::string csv = "L,gap\n";
        for (const GapScanRow& row : scan.rows)
          csv +=
              std::to_string(row.num_sites) + "," + format_full(row.gap) + "\n";
        emit(output, csv);
      } else {
        emit_json(output, gap_scan_to_json(scan));
      }
      if (!scan_summary_path.empty())
        write_file_atomic(scan_summary_path,
                          gap_scan_to_json(scan)["fit"].dump(2) + "\n");
    } else if (ness_cmd->parsed()) {
      SteadyState s = observables(resolve_spec(ness_opts));
      emit_json(output, steady_state_to_json(s));
    } else if (analytic_cmd->parsed()) {
      XYChainParams p = chain_params(analytic_opts);
      std::vector<SecularRoot> roots;
      if (analytic_sign != "-")
        for (const auto& r : solve_secular(secular_params(p, Sign::plus)))
          roots.push_back(r);
      if (analytic_sign != "+")
        for (const auto& r : solve_secular(secular_params(p, Sign::minus)))
          roots.push_back(r);
      emit_json(output, secular_roots_to_json(roots));
    } else if (ising_cmd->parsed()) {
      XYChainParams p = chain_params(ising_opts);
      p.anisotropy = 1.0;
      Json j = complex_arrays(ising_spectrum(p), "values_re", "values_im");
      Json set = complex_arrays(
          ising_allowed_set(p.coupling, p.gamma_1(), p.gamma_l()), "set_re",
          "set_im");
      j["L"] = p.num_sites;
      j["set_re"] = set["set_re"];
      j["set_im"] = set["set_im"];
      emit_json(output, j);
    } else if (oracle_cmd->parsed()) {
      OracleReport report = oracle_compare(resolve_spec(oracle_opts));
      emit_json(output, oracle_report_to_json(report));
    } else if (fig1_cmd->parsed()) {
      Fig1Options opts;
      for (const std::string& f : write_fig1_files(fig1_dir, opts))
        std::printf("%s\n", f.c_str());
    }
  } catch (const Error& e) {
    Json err{{"error", error_code_name(e.code())}, {"message", e.what()}};
    std::fprintf(stderr, "%s\n", err.dump().c_str());
    return kExitNumerical;
  } catch (const std::exception& e) {
    Json err{{"error", "Unexpected"}, {"message", e.what()}};
    std::fprintf(stderr, "%s\n", err.dump().c_str());
    return kExitNumerical;
  }
  return kExitOk;
}
