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

#include "entrodis/harness.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <limits>

#include "entrodis/choi.hpp"
#include "entrodis/errors.hpp"
#include "entrodis/functionals.hpp"
#include "entrodis/io.hpp"
#include "entrodis/linalg.hpp"
#include "entrodis/stinespring.hpp"

namespace entrodis::harness {

using nlohmann::json;

void validate(const SweepConfig& cfg) {
  if (cfg.trials < 1) throw ValidationError("sweep config: trials must be >= 1");
  if (cfg.dims.empty()) throw ValidationError("sweep config: dims must be non-empty");
  for (std::size_t d : cfg.dims)
    if (d < 2) throw ValidationError("sweep config: dims must all be >= 2");
  if (!(cfg.tolerance > 0.0)) throw ValidationError("sweep config: tolerance must be positive");
  if (cfg.max_kraus && *cfg.max_kraus < 1)
    throw ValidationError("sweep config: max_kraus must be >= 1");
  for (const std::string& name : cfg.checks) {
    const auto& known = all_check_names();
    if (std::find(known.begin(), known.end(), name) == known.end())
      throw ValidationError("sweep config: unknown check '" + name + "'");
  }
}

const std::vector<std::string>& all_check_names() {
  static const std::vector<std::string> names{
      "tradeoff", "equality", "monotonicity", "continuity", "state_independent",
      "fidelity_critique",
  };
  return names;
}

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

std::size_t max_kraus_for(const SweepConfig& cfg, std::size_t d) {
  return cfg.max_kraus ? *cfg.max_kraus : d * d;
}

/// Margin collector for one trial. Inequality margins pass at >= -tolerance;
/// pinned equality margins (require_abs) pass at >= 0.
struct TrialEval {
  double slack = kInf;
  double hard_slack = kInf;
  std::string kind;
  std::optional<Instrument> instrument;
  std::optional<DensityMatrix> state;

  void require(const std::string& name, double margin) {
    if (margin < slack) {
      slack = margin;
      if (margin < hard_slack) kind = name;
    }
  }
  void require_abs(const std::string& name, double diff, double tau) {
    const double margin = tau - std::abs(diff);
    if (margin < hard_slack) {
      hard_slack = margin;
      if (margin < slack) kind = name;
    }
  }
  void set_instance(const Instrument& ins, const DensityMatrix& rho) {
    instrument = ins;
    state = rho;
  }
};

template <typename Body>
CheckResult run_trials(const std::string& name, const SweepConfig& cfg, Body&& body) {
  CheckResult res;
  res.name = name;
  res.worst_slack = kInf;
  for (std::size_t d : cfg.dims) {
    for (std::size_t t = 0; t < cfg.trials; ++t) {
      const std::uint64_t tseed = derive_seed(cfg.seed, name, d, t);
      Rng rng(tseed);
      TrialEval ev;
      body(d, rng, ev);
      const bool pass = ev.slack >= -cfg.tolerance && ev.hard_slack >= 0.0;
      const double slack = std::min(ev.slack, ev.hard_slack);
      res.records.push_back({d, t, slack, pass});
      res.worst_slack = std::min(res.worst_slack, slack);
      ++res.trials;
      if (!pass) {
        ++res.failures;
        FailingInstance fi;
        fi.dim = d;
        fi.trial = t;
        fi.seed = tseed;
        fi.kind = ev.kind;
        fi.slack = slack;
        if (ev.instrument) fi.instrument = instrument_to_json(*ev.instrument);
        if (ev.state) fi.state = density_to_json(*ev.state);
        res.failing.push_back(std::move(fi));
      }
    }
  }
  return res;
}

Instrument rotated_projective(const DensityMatrix& rho, const ComplexMatrix& u) {
  // Kraus U|v_j><v_j|, one per outcome: a von Neumann measurement of the
  // eigenbasis followed by a fixed unitary relabeling of the output space.
  std::vector<ComplexMatrix> kraus;
  std::vector<Outcome> outcomes;
  for (std::size_t j = 0; j < rho.dim(); ++j) {
    const std::vector<cplx> vj = column(rho.eigenbasis(), j);
    kraus.push_back(multiply(u, outer(vj, vj)));
    outcomes.push_back({"k" + std::to_string(j), {j}});
  }
  return Instrument::from_parts(Channel::from_kraus(std::move(kraus)), std::move(outcomes));
}

}  // namespace

DensityMatrix sample_density(std::size_t d, Rng& rng) {
  const std::size_t rank = 1 + rng.uniform_index(d);
  return random_density(d, rank, rng);
}

namespace {
Instrument sample_instrument_impl(std::size_t d, std::size_t max_kraus, std::size_t min_kraus,
                                  Rng& rng) {
  const std::size_t span = max_kraus - min_kraus + 1;
  const std::size_t denv = min_kraus + rng.uniform_index(span);
  const ComplexMatrix v = haar_isometry(d * denv, d, rng);
  std::vector<ComplexMatrix> kraus(denv, ComplexMatrix(d, d));
  for (std::size_t i = 0; i < denv; ++i)
    for (std::size_t m = 0; m < d; ++m)
      for (std::size_t n = 0; n < d; ++n) kraus[i].at(m, n) = v.at(m * denv + i, n);

  // Random surjective coarse-graining of Kraus indices into outcomes.
  const std::size_t num_outcomes = 1 + rng.uniform_index(denv);
  std::vector<std::size_t> order(denv);
  for (std::size_t i = 0; i < denv; ++i) order[i] = i;
  for (std::size_t i = denv; i-- > 1;)
    std::swap(order[i], order[rng.uniform_index(i + 1)]);
  std::vector<Outcome> outcomes(num_outcomes);
  for (std::size_t k = 0; k < num_outcomes; ++k) {
    outcomes[k].label = "k" + std::to_string(k);
    outcomes[k].kraus_indices.push_back(order[k]);
  }
  for (std::size_t i = num_outcomes; i < denv; ++i)
    outcomes[rng.uniform_index(num_outcomes)].kraus_indices.push_back(order[i]);
  for (Outcome& o : outcomes) std::sort(o.kraus_indices.begin(), o.kraus_indices.end());

  return Instrument::from_parts(Channel::from_kraus(std::move(kraus)), std::move(outcomes));
}
}  // namespace

Instrument sample_instrument(std::size_t d, std::size_t max_kraus, Rng& rng) {
  return sample_instrument_impl(d, max_kraus, 1, rng);
}

Instrument sample_noisy_instrument(std::size_t d, std::size_t max_kraus, Rng& rng) {
  return sample_instrument_impl(d, std::max<std::size_t>(max_kraus, 2), 2, rng);
}

CheckResult check_tradeoff(const SweepConfig& cfg) {
  return run_trials("tradeoff", cfg, [&](std::size_t d, Rng& rng, TrialEval& ev) {
    const DensityMatrix rho = sample_density(d, rng);
    const Instrument ins = sample_instrument(d, max_kraus_for(cfg, d), rng);
    ev.set_instance(ins, rho);

    const double info = mutual_information(ins, rho);
    const double dist = disturbance(ins.channel(), rho);
    const double chi = holevo_chi(ins, rho);
    ev.require("I <= D", dist - info);
    ev.require("I <= chi", chi - info);
    ev.require("chi <= D", dist - chi);

    // The probe-side entropy equals the exchange entropy exactly.
    const double s_probe = von_neumann_entropy(apply(complementary(ins), rho));
    const double s_e = exchange_entropy(ins.channel(), rho);
    ev.require_abs("S(P[rho]) == S_e", s_probe - s_e, 1e-9);
  });
}

CheckResult check_equality_cases(const SweepConfig& cfg) {
  return run_trials("equality", cfg, [&](std::size_t d, Rng& rng, TrialEval& ev) {
    const DensityMatrix rho = sample_density(d, rng);
    const double s_rho = von_neumann_entropy(rho);

    const Instrument plain = Instrument::projective_eigenbasis(rho);
    ev.set_instance(plain, rho);
    const double i_plain = mutual_information(plain, rho);
    const double d_plain = disturbance(plain.channel(), rho);
    ev.require("projective I <= D", d_plain - i_plain);
    ev.require("projective D <= I", i_plain - d_plain);
    ev.require("projective I >= S(rho)", i_plain - s_rho);
    ev.require("projective I <= S(rho)", s_rho - i_plain);

    const Instrument rotated = rotated_projective(rho, haar_unitary(d, rng));
    const double i_rot = mutual_information(rotated, rho);
    const double d_rot = disturbance(rotated.channel(), rho);
    ev.require("rotated I <= D", d_rot - i_rot);
    ev.require("rotated D <= I", i_rot - d_rot);
    ev.require("rotated I >= S(rho)", i_rot - s_rho);
    ev.require("rotated I <= S(rho)", s_rho - i_rot);
  });
}

CheckResult check_monotonicity(const SweepConfig& cfg) {
  return run_trials("monotonicity", cfg, [&](std::size_t d, Rng& rng, TrialEval& ev) {
    const DensityMatrix rho = sample_density(d, rng);
    const Instrument first = sample_instrument(d, max_kraus_for(cfg, d), rng);
    const Instrument second = sample_instrument(d, max_kraus_for(cfg, d), rng);
    ev.set_instance(first, rho);

    const double d_single = disturbance(first.channel(), rho);
    const double d_composed = disturbance(compose(second.channel(), first.channel()), rho);
    ev.require("D(Q' o Q) >= D(Q)", d_composed - d_single);
  });
}

CheckResult check_continuity(const SweepConfig& cfg) {
  static const std::vector<double> kEpsilons{1e-2, 1e-4, 1e-6};
  std::vector<double> worst_state_gap(kEpsilons.size(), 0.0);
  std::vector<double> worst_channel_gap(kEpsilons.size(), 0.0);

  CheckResult res =
      run_trials("continuity", cfg, [&](std::size_t d, Rng& rng, TrialEval& ev) {
        const DensityMatrix rho = sample_density(d, rng);
        const DensityMatrix sigma = sample_density(d, rng);
        const Instrument ins = sample_instrument(d, max_kraus_for(cfg, d), rng);
        const Channel& q = ins.channel();
        const Channel r = sample_instrument(d, max_kraus_for(cfg, d), rng).channel();
        ev.set_instance(ins, rho);

        const double d_base = disturbance(q, rho);
        const double s_base = von_neumann_entropy(rho);

        // Kraus-pair Frobenius factors of the W-matrix perturbation bound.
        const std::size_t nk = q.kraus().size();
        std::vector<double> pair_norm(nk * nk);
        for (std::size_t i = 0; i < nk; ++i)
          for (std::size_t j = 0; j < nk; ++j) {
            const ComplexMatrix g = multiply_hn(q.kraus()[i], q.kraus()[j]);
            pair_norm[i * nk + j] = hs_inner(g, g).real();
          }

        const WMatrix w = w_matrix(q, rho);
        for (std::size_t e = 0; e < kEpsilons.size(); ++e) {
          const double eps = kEpsilons[e];
          ComplexMatrix pm = scaled(rho.matrix(), 1.0 - eps);
          accumulate(pm, sigma.matrix(), eps);
          const DensityMatrix rho_p = DensityMatrix::from_matrix(std::move(pm));

          const double t = trace_distance(rho, rho_p);
          ev.require("|S - S'| <= h(T)",
                     fannes_audenaert_bound(t, d) -
                         std::abs(s_base - von_neumann_entropy(rho_p)));
          ev.require("T(Q[rho], Q[rho']) <= T(rho, rho')",
                     t - trace_distance(apply(q, rho), apply(q, rho_p)));

          const WMatrix wp = w_matrix(q, rho_p);
          const ComplexMatrix diff = subtract(rho.matrix(), rho_p.matrix());
          const double diff_sq = hs_inner(diff, diff).real();
          double w_margin = kInf;
          for (std::size_t i = 0; i < nk; ++i)
            for (std::size_t j = 0; j < nk; ++j) {
              const double lhs = std::norm(w.matrix.at(i, j) - wp.matrix.at(i, j));
              w_margin = std::min(w_margin, pair_norm[i * nk + j] * diff_sq - lhs);
            }
          ev.require("|W - W'|^2 bound", w_margin);

          const double state_gap = std::abs(d_base - disturbance(q, rho_p));
          worst_state_gap[e] = std::max(worst_state_gap[e], state_gap);

          const Channel q_p = mix_channels(1.0 - eps, q, r);
          ev.require("T(Q[rho], Q'[rho]) <= eps",
                     eps - trace_distance(apply(q, rho), apply(q_p, rho)));
          const double channel_gap = std::abs(d_base - disturbance(q_p, rho));
          worst_channel_gap[e] = std::max(worst_channel_gap[e], channel_gap);
        }
      });

  for (std::size_t e = 0; e < kEpsilons.size(); ++e) {
    const std::string tag = std::to_string(kEpsilons[e]);
    res.aggregates["worst_state_gap_eps_" + tag] = worst_state_gap[e];
    res.aggregates["worst_channel_gap_eps_" + tag] = worst_channel_gap[e];
  }
  double ladder = kInf;
  for (std::size_t e = 0; e + 1 < kEpsilons.size(); ++e) {
    ladder = std::min(ladder, worst_state_gap[e] - worst_state_gap[e + 1]);
    ladder = std::min(ladder, worst_channel_gap[e] - worst_channel_gap[e + 1]);
  }
  res.aggregates["ladder_margin"] = ladder;
  res.aggregate_ok = ladder >= -cfg.tolerance;
  return res;
}

CheckResult check_state_independent(const SweepConfig& cfg) {
  return run_trials("state_independent", cfg, [&](std::size_t d, Rng& rng, TrialEval& ev) {
    const Instrument uni = Instrument::trivial(Channel::unitary(haar_unitary(d, rng)));
    const StateIndependent si_u = state_independent(uni);
    ev.require("unitary D~ == 0", -si_u.dist);
    ev.require("unitary I~ == 0", -si_u.info);

    const Instrument noisy = sample_noisy_instrument(d, max_kraus_for(cfg, d), rng);
    ev.set_instance(noisy, DensityMatrix::maximally_mixed(d));
    const StateIndependent si_n = state_independent(noisy);
    ev.require("noisy D~ > 1e-6", si_n.dist - 1e-6);
    ev.require("I~ <= D~", si_n.dist - si_n.info);

    // The maximally mixed state is fully degenerate, so the tradeoff must
    // hold in any eigenbasis convention, not just the canonical one.
    const std::vector<double> flat(d, 1.0 / static_cast<double>(d));
    const double i_rot = mutual_information_in_basis(noisy, flat, haar_unitary(d, rng));
    ev.require("rotated-basis I~ <= D~", si_n.dist - i_rot);

    const Instrument proj = Instrument::projective(ComplexMatrix::identity(d));
    const StateIndependent si_p = state_independent(proj);
    const double log_d = std::log2(static_cast<double>(d));
    ev.require_abs("projective I~ == log2 d", si_p.info - log_d, 1e-9);
    ev.require_abs("projective D~ == log2 d", si_p.dist - log_d, 1e-9);
  });
}

CheckResult check_fidelity_critique(const SweepConfig& cfg) {
  return run_trials("fidelity_critique", cfg, [&](std::size_t d, Rng& rng, TrialEval& ev) {
    // A unitary rotating a pure state onto an orthogonal one: maximal
    // fidelity-based disturbance from a perfectly reversible map.
    const PureState psi = random_pure_state(d, rng);
    std::vector<cplx> phi(d);
    double norm_sq = 0.0;
    do {
      for (cplx& a : phi) a = rng.complex_gaussian();
      cplx overlap = 0.0;
      for (std::size_t i = 0; i < d; ++i) overlap += std::conj(psi.amplitudes[i]) * phi[i];
      norm_sq = 0.0;
      for (std::size_t i = 0; i < d; ++i) {
        phi[i] -= overlap * psi.amplitudes[i];
        norm_sq += std::norm(phi[i]);
      }
    } while (norm_sq < 1e-12);  // redraw a direction parallel to psi
    const double inv = 1.0 / std::sqrt(norm_sq);
    for (cplx& a : phi) a *= inv;

    ComplexMatrix u = ComplexMatrix::identity(d);
    accumulate(u, outer(psi.amplitudes, psi.amplitudes), -1.0);
    accumulate(u, outer(phi, phi), -1.0);
    accumulate(u, outer(phi, psi.amplitudes), 1.0);
    accumulate(u, outer(psi.amplitudes, phi), 1.0);

    const Instrument swap_ins = Instrument::trivial(Channel::unitary(std::move(u)));
    const DensityMatrix rho = DensityMatrix::pure(psi);
    ev.set_instance(swap_ins, rho);

    const FidelityComparators fc = fidelity_disturbances(swap_ins.channel(), rho);
    ev.require("1 - F >= 1/2", fc.fidelity_disturbance - 0.5);
    ev.require("entropic D == 0", -std::abs(disturbance(swap_ins.channel(), rho)));
    ev.require("dbar == 0", -fc.dbar);

    const Channel rand_uni = Channel::unitary(haar_unitary(d, rng));
    const DensityMatrix mixed = sample_density(d, rng);
    const FidelityComparators fc2 = fidelity_disturbances(rand_uni, mixed);
    ev.require("mixed-state unitary dbar == 0", -fc2.dbar);
    ev.require("mixed-state unitary D == 0", -std::abs(disturbance(rand_uni, mixed)));
  });
}

SweepResult run_all(const SweepConfig& cfg) {
  validate(cfg);
  const auto start = std::chrono::steady_clock::now();

  std::vector<std::string> enabled = cfg.checks.empty() ? all_check_names() : cfg.checks;
  // Run in canonical order regardless of the order given.
  std::vector<std::string> ordered;
  for (const std::string& name : all_check_names())
    if (std::find(enabled.begin(), enabled.end(), name) != enabled.end())
      ordered.push_back(name);

  SweepResult result;
  result.config = cfg;
  result.config.checks = ordered;
  for (const std::string& name : ordered) {
    if (name == "tradeoff") result.checks.push_back(check_tradeoff(cfg));
    else if (name == "equality") result.checks.push_back(check_equality_cases(cfg));
    else if (name == "monotonicity") result.checks.push_back(check_monotonicity(cfg));
    else if (name == "continuity") result.checks.push_back(check_continuity(cfg));
    else if (name == "state_independent") result.checks.push_back(check_state_independent(cfg));
    else if (name == "fidelity_critique") result.checks.push_back(check_fidelity_critique(cfg));
  }

  result.duration_s =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (!cfg.output_path.empty()) write_report(result, cfg.output_path);
  return result;
}

bool SweepResult::all_passed() const {
  for (const CheckResult& c : checks)
    if (!c.passed()) return false;
  return true;
}

json report_json(const SweepResult& result, bool include_duration) {
  json config{
      {"dims", result.config.dims},
      {"trials", result.config.trials},
      {"seed", result.config.seed},
      {"max_kraus", result.config.max_kraus ? json(*result.config.max_kraus) : json(nullptr)},
      {"tolerance", result.config.tolerance},
      {"checks", result.config.checks},
      {"output_path", result.config.output_path},
  };
  json checks = json::array();
  for (const CheckResult& c : result.checks) {
    json failing = json::array();
    for (const FailingInstance& f : c.failing) {
      failing.push_back(json{{"dim", f.dim},
                             {"trial", f.trial},
                             {"seed", f.seed},
                             {"kind", f.kind},
                             {"slack", f.slack},
                             {"instrument", f.instrument},
                             {"state", f.state}});
    }
    json entry{{"name", c.name},
               {"trials", c.trials},
               {"failures", c.failures},
               {"worst_slack", c.worst_slack},
               {"failing_instances", std::move(failing)}};
    if (!c.aggregates.empty()) {
      entry["aggregates"] = c.aggregates;
      entry["aggregate_ok"] = c.aggregate_ok;
    }
    checks.push_back(std::move(entry));
  }
  json out{{"config", std::move(config)}, {"checks", std::move(checks)}};
  if (include_duration) out["duration_s"] = result.duration_s;
  return out;
}

std::string report_csv(const SweepResult& result) {
  std::string csv = "check,dim,trial,slack,pass\n";
  char buf[64];
  for (const CheckResult& c : result.checks) {
    for (const TrialRecord& r : c.records) {
      std::snprintf(buf, sizeof(buf), "%.17g", r.slack);
      csv += c.name + "," + std::to_string(r.dim) + "," + std::to_string(r.trial) + "," + buf +
             "," + (r.pass ? "1" : "0") + "\n";
    }
  }
  return csv;
}

void write_report(const SweepResult& result, const std::string& json_path) {
  save_text(json_path, report_json(result).dump(2) + "\n");
  std::filesystem::path csv_path(json_path);
  csv_path.replace_extension(".csv");
  save_text(csv_path.string(), report_csv(result));
}

int exit_code(const SweepResult& result) { return result.all_passed() ? 0 : 1; }

}  // namespace entrodis::harness
