// Copyright 2026 The Entrodis Authors
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

#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "entrodis/choi.hpp"
#include "entrodis/errors.hpp"
#include "entrodis/functionals.hpp"
#include "entrodis/harness.hpp"
#include "entrodis/io.hpp"

namespace {

using namespace entrodis;
using nlohmann::json;

void print_row(const char* name, double value, const char* note = "") {
  std::printf("  %-22s %.6g%s\n", name, value, note);
}

int cmd_compute(const std::string& instrument_path, const std::string& state_path,
                bool normalized, bool as_json) {
  const Instrument ins = load_instrument(instrument_path);
  const DensityMatrix rho = load_density(state_path);
  const TradeoffReport r = full_report(ins, rho);

  if (as_json) {
    std::printf("%s\n", report_to_json(r).dump(2).c_str());
    return 0;
  }
  std::printf("tradeoff report (din=%zu, dout=%zu)\n", r.din, r.dout);
  print_row("S(rho)", r.s_rho);
  print_row("S(Q[rho])", r.s_out);
  print_row("S_e", r.s_exchange);
  print_row("I_c", r.i_coherent);
  if (normalized) {
    print_row("I / log2 d", r.normalized_i);
    print_row("D / log2 d", r.normalized_d, std::abs(r.disturbance) < 1e-9
                                                 ? "   (no disturbance)"
                                                 : "");
  } else {
    print_row("I", r.mutual_info);
    print_row("D", r.disturbance, std::abs(r.disturbance) < 1e-9 ? "   (no disturbance)" : "");
  }
  print_row("chi", r.holevo_rhs);
  if (std::isfinite(r.fid_disturbance)) {
    print_row("1 - F", r.fid_disturbance);
    print_row("1 - F_e", r.ent_fid_disturbance);
    print_row("dbar", r.dbar);
  } else {
    std::printf("  %-22s n/a (din != dout)\n", "fidelity comparators");
  }
  print_row("slack (D - I)", r.slack);
  return 0;
}

int cmd_compare(const std::string& instrument_path, const std::string& state_path, bool as_json) {
  const Instrument ins = load_instrument(instrument_path);
  const DensityMatrix rho = load_density(state_path);
  const double d_entropic = disturbance(ins.channel(), rho);
  const FidelityComparators fc = fidelity_disturbances(ins.channel(), rho);

  if (as_json) {
    const json j{{"disturbance", d_entropic},
                 {"fid_disturbance", fc.fidelity_disturbance},
                 {"ent_fid_disturbance", fc.entanglement_fidelity_disturbance},
                 {"dbar", fc.dbar}};
    std::printf("%s\n", j.dump(2).c_str());
    return 0;
  }
  std::printf("disturbance comparators\n");
  print_row("entropic D", d_entropic);
  print_row("1 - F", fc.fidelity_disturbance);
  print_row("1 - F_e", fc.entanglement_fidelity_disturbance);
  print_row("dbar", fc.dbar);
  return 0;
}

int cmd_decompose(const std::string& instrument_path, const std::string& reference_path,
                  bool as_json) {
  const Instrument ins = load_instrument(instrument_path);
  const DensityMatrix ref = load_density(reference_path);
  const Instrument info_map = informational_map(ref);
  const Decomposition dec = decompose_xi(ins.channel(), info_map.channel());

  if (as_json) {
    json j{{"xi", dec.xi},
           {"din", ins.din()},
           {"dout", ins.dout()},
           {"dynamical_choi", nullptr}};
    if (dec.dynamical) j["dynamical_choi"] = matrix_to_json(dec.dynamical->matrix);
    std::printf("%s\n", j.dump(2).c_str());
    return 0;
  }
  std::printf("informational weight\n");
  print_row("xi*", dec.xi);
  if (dec.dynamical)
    std::printf("  dynamical component present (Choi rank <= %zu); use --json to export it\n",
                dec.dynamical->matrix.rows);
  else
    std::printf("  purely informational: no dynamical component\n");
  return 0;
}

harness::SweepConfig sweep_config_from_json(const json& j, const std::string& path) {
  harness::SweepConfig cfg;
  try {
    if (j.contains("dims")) cfg.dims = j["dims"].get<std::vector<std::size_t>>();
    if (j.contains("trials")) cfg.trials = j["trials"].get<std::size_t>();
    if (j.contains("seed")) cfg.seed = j["seed"].get<std::uint64_t>();
    if (j.contains("max_kraus") && !j["max_kraus"].is_null())
      cfg.max_kraus = j["max_kraus"].get<std::size_t>();
    if (j.contains("tolerance")) cfg.tolerance = j["tolerance"].get<double>();
    if (j.contains("checks")) cfg.checks = j["checks"].get<std::vector<std::string>>();
    if (j.contains("output_path")) cfg.output_path = j["output_path"].get<std::string>();
  } catch (const json::exception& e) {
    throw IoError(path + ": " + e.what());
  }
  return cfg;
}

int cmd_sweep(const harness::SweepConfig& cfg) {
  const harness::SweepResult result = harness::run_all(cfg);
  for (const harness::CheckResult& c : result.checks) {
    std::printf("[%s] %-18s trials=%zu failures=%zu worst_slack=%.3e\n",
                c.passed() ? "PASS" : "FAIL", c.name.c_str(), c.trials, c.failures,
                c.worst_slack);
  }
  std::printf("%zu check(s) in %.2f s%s\n", result.checks.size(), result.duration_s,
              cfg.output_path.empty() ? "" : (", report: " + cfg.output_path).c_str());
  return harness::exit_code(result);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"entropic information-disturbance toolkit"};
  app.require_subcommand(1);

  std::string instrument_path, state_path, reference_path;
  bool normalized = false, as_json = false, as_table = false;

  CLI::App* compute = app.add_subcommand("compute", "full tradeoff report for one instance");
  compute->add_option("instrument", instrument_path, "instrument JSON file")->required();
  compute->add_option("state", state_path, "density-matrix JSON file")->required();
  compute->add_flag("--normalized", normalized, "divide I and D by log2(d)");
  CLI::Option* json_flag = compute->add_flag("--json", as_json, "machine-readable output");
  compute->add_flag("--table", as_table, "human-readable table (default)")->excludes(json_flag);

  CLI::App* compare = app.add_subcommand("compare", "entropic vs fidelity-based disturbance");
  compare->add_option("instrument", instrument_path, "instrument JSON file")->required();
  compare->add_option("state", state_path, "density-matrix JSON file")->required();
  compare->add_flag("--json", as_json, "machine-readable output");

  CLI::App* decompose =
      app.add_subcommand("decompose", "informational/dynamical convex split of a channel");
  decompose->add_option("instrument", instrument_path, "instrument JSON file")->required();
  decompose->add_option("reference", reference_path, "reference state JSON file")->required();
  decompose->add_flag("--json", as_json, "machine-readable output");

  harness::SweepConfig cli_cfg;
  std::string config_path, out_path;
  std::vector<std::size_t> dims_flag;
  std::vector<std::string> checks_flag;
  std::int64_t trials_flag = -1, seed_flag = -1, max_kraus_flag = -1;
  double tolerance_flag = -1.0;

  CLI::App* sweep = app.add_subcommand("sweep", "randomized verification sweep");
  sweep->add_option("--config", config_path, "sweep config JSON file");
  sweep->add_option("--dims", dims_flag, "dimensions to sweep")->delimiter(',');
  sweep->add_option("--trials", trials_flag, "trials per check per dimension");
  sweep->add_option("--seed", seed_flag, "base seed");
  sweep->add_option("--max-kraus", max_kraus_flag, "cap on Kraus operators (default d^2)");
  sweep->add_option("--tolerance", tolerance_flag, "slack tolerance (default 1e-8)");
  sweep->add_option("--checks", checks_flag, "subset of checks to run")->delimiter(',');
  sweep->add_option("--out", out_path, "report JSON path (CSV lands next to it)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (compute->parsed()) return cmd_compute(instrument_path, state_path, normalized, as_json);
    if (compare->parsed()) return cmd_compare(instrument_path, state_path, as_json);
    if (decompose->parsed()) return cmd_decompose(instrument_path, reference_path, as_json);
    if (sweep->parsed()) {
      harness::SweepConfig cfg = config_path.empty()
                                     ? harness::SweepConfig{}
                                     : sweep_config_from_json(load_json(config_path), config_path);
      if (!dims_flag.empty()) cfg.dims = dims_flag;
      if (trials_flag >= 0) cfg.trials = static_cast<std::size_t>(trials_flag);
      if (seed_flag >= 0) cfg.seed = static_cast<std::uint64_t>(seed_flag);
      if (max_kraus_flag >= 0) cfg.max_kraus = static_cast<std::size_t>(max_kraus_flag);
      if (tolerance_flag >= 0.0) cfg.tolerance = tolerance_flag;
      if (!checks_flag.empty()) cfg.checks = checks_flag;
      if (!out_path.empty()) cfg.output_path = out_path;
      return cmd_sweep(cfg);
    }
  } catch (const IoError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const ValidationError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const DimensionError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }
  return 2;
}
