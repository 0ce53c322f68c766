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

#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>

#include "entrodis/channel.hpp"
#include "entrodis/density.hpp"

namespace entrodis {

// All entropies are in bits (base-2 logarithms).

/// -sum p log2 p with 0 log 0 = 0. Requires entries >= -1e-12 summing to 1.
double shannon_entropy(std::span<const double> probs,
                       const Tolerances& tol = default_tolerances());

double binary_entropy(double p);

/// S(rho) = -Tr[rho log2 rho], evaluated on the cached spectrum.
double von_neumann_entropy(const DensityMatrix& rho);

/// W[i][j] = Tr[K_i rho K_j^dagger]; Hermitian, PSD, unit trace. Its entropy
/// is the exchange entropy of the channel at rho.
struct WMatrix {
  ComplexMatrix matrix;
};
WMatrix w_matrix(const Channel& c, const DensityMatrix& rho);

/// Exchange entropy S_e(rho, Q) = S(W). For Kraus sets larger than
/// din*dout the same nonzero spectrum is taken from the frame operator
/// sum_i vec(K_i sqrt(rho)) vec(K_i sqrt(rho))^dagger instead of W itself.
double exchange_entropy(const Channel& c, const DensityMatrix& rho);

/// S((Q (x) 1)[|Psi><Psi|]) for a spectral purification |Psi> of rho; the
/// algebraically independent route to the exchange entropy. `minimal`
/// purifies against a reference of dimension rank(rho) instead of dim.
double exchange_entropy_via_purification(const Channel& c, const DensityMatrix& rho,
                                         bool minimal = false);

/// I_c = S(Q(rho)) - S_e(rho, Q); may be negative.
double coherent_information(const Channel& c, const DensityMatrix& rho);

/// Entropic disturbance D = S(rho) - I_c. Zero exactly when the channel is
/// invertible on rho; never decreases under further channels.
double disturbance(const Channel& c, const DensityMatrix& rho);

/// Mutual information between the eigenvalue label of rho and the outcome
/// label: joint p(j,k) = lambda_j <j|Pi_k|j> over the deterministic
/// eigenbasis of rho.
double mutual_information(const Instrument& ins, const DensityMatrix& rho);

/// Same, against an explicitly supplied spectral decomposition (used to
/// probe basis conventions of degenerate states).
double mutual_information_in_basis(const Instrument& ins, std::span<const double> spectrum,
                                   const ComplexMatrix& basis);

/// Holevo quantity of the complementary channel's ensemble
/// {P[|j><j|], lambda_j}: chi = S(P[rho]) - sum_j lambda_j S(P[|j><j|]).
/// Sits between I and D on every instance.
double holevo_chi(const Instrument& ins, const DensityMatrix& rho);

/// <Psi|(Q (x) 1)[|Psi><Psi|]|Psi> = sum_i |Tr[K_i rho]|^2.
double entanglement_fidelity(const Channel& c, const DensityMatrix& rho);

/// The fidelity-based comparators the entropic disturbance replaces:
/// 1 - F(rho, Q[rho]), 1 - F_e, and the unitary-orbit-maximized
/// dbar = 1 - max_U F(rho, U Q[rho] U^dagger). The maximum depends only on
/// the two spectra: max F = (sum_i sqrt(lambda_i mu_i))^2 over descending
/// spectra, so dbar vanishes whenever the channel preserves the spectrum.
struct FidelityComparators {
  double fidelity_disturbance = 0.0;
  double entanglement_fidelity_disturbance = 0.0;
  double dbar = 0.0;
};
FidelityComparators fidelity_disturbances(const Channel& c, const DensityMatrix& rho);

/// (I, D) at the maximally mixed input: the apparatus-only figures.
/// D vanishes iff the channel acts unitarily.
struct StateIndependent {
  double info = 0.0;
  double dist = 0.0;
};
StateIndependent state_independent(const Instrument& ins);

/// h(T) = T log2(d-1) + H2(T); entropy continuity bound in trace distance.
double fannes_audenaert_bound(double t, std::size_t d);

struct TradeoffReport {
  double s_rho = 0.0;
  double s_out = 0.0;
  double s_exchange = 0.0;
  double i_coherent = 0.0;
  double disturbance = 0.0;
  double mutual_info = 0.0;
  double holevo_rhs = 0.0;
  double normalized_i = 0.0;
  double normalized_d = 0.0;
  double fid_disturbance = 0.0;      // NaN when din != dout
  double ent_fid_disturbance = 0.0;  // NaN when din != dout
  double dbar = 0.0;                 // NaN when din != dout
  double slack = 0.0;                // disturbance - mutual_info
  std::size_t din = 0, dout = 0;
  std::optional<std::uint64_t> seed;
  std::string basis_convention = "eigh-descending-stable";
};

TradeoffReport full_report(const Instrument& ins, const DensityMatrix& rho);

}  // namespace entrodis
