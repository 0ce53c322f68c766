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

#include <cstddef>
#include <string>
#include <vector>

#include "entrodis/density.hpp"
#include "entrodis/matrix.hpp"
#include "entrodis/tolerances.hpp"

namespace entrodis {

/// Trace-preserving completely positive map in Kraus form. Input and output
/// dimensions may differ; every Kraus operator is dout x din and the set
/// satisfies sum_i K_i^dagger K_i = I within tol.completeness.
class Channel {
 public:
  static Channel from_kraus(std::vector<ComplexMatrix> kraus,
                            const Tolerances& tol = default_tolerances());
  static Channel identity(std::size_t dim);
  static Channel unitary(ComplexMatrix u, const Tolerances& tol = default_tolerances());
  /// Qubit channel with Kraus {I/2, X/2, Y/2, Z/2}: every input goes to I/2.
  static Channel depolarizing_qubit();

  std::size_t din() const { return din_; }
  std::size_t dout() const { return dout_; }
  const std::vector<ComplexMatrix>& kraus() const { return kraus_; }

 private:
  friend class Instrument;
  Channel() = default;
  std::size_t din_ = 0, dout_ = 0;
  std::vector<ComplexMatrix> kraus_;
};

/// A channel whose Kraus operators are partitioned into labelled outcome
/// groups; the partition induces the POVM element Pi_k = sum_{i in I_k}
/// K_i^dagger K_i of each outcome.
struct Outcome {
  std::string label;
  std::vector<std::size_t> kraus_indices;
};

class Instrument {
 public:
  static Instrument from_parts(Channel channel, std::vector<Outcome> outcomes,
                               const Tolerances& tol = default_tolerances());
  /// Whole channel as a single outcome labelled "k0".
  static Instrument trivial(Channel channel);
  /// Projective measurement onto the columns of `basis`, one outcome per
  /// column, labels "k0".."k{d-1}".
  static Instrument projective(const ComplexMatrix& basis,
                               const Tolerances& tol = default_tolerances());
  /// Projective measurement in the eigenbasis of rho.
  static Instrument projective_eigenbasis(const DensityMatrix& rho);

  const Channel& channel() const { return channel_; }
  const std::vector<Outcome>& outcomes() const { return outcomes_; }
  std::size_t num_outcomes() const { return outcomes_.size(); }
  std::size_t din() const { return channel_.din(); }
  std::size_t dout() const { return channel_.dout(); }

 private:
  Instrument() = default;
  Channel channel_;
  std::vector<Outcome> outcomes_;
};

/// sum_i K_i rho K_i^dagger
DensityMatrix apply(const Channel& c, const DensityMatrix& rho);
/// Same map over a raw Hermitian operator (no state validation of the input).
ComplexMatrix apply_raw(const Channel& c, const ComplexMatrix& op);

/// POVM elements Pi_k, ordered like the outcomes.
std::vector<ComplexMatrix> povm(const Instrument& ins);

/// p_k = Tr[Pi_k rho]; clipped at -1e-12 and renormalization-free.
std::vector<double> outcome_probabilities(const Instrument& ins, const DensityMatrix& rho);

/// Conditional post-measurement state sum_{i in I_k} K_i rho K_i^dagger / p_k.
/// Throws ValidationError for an outcome of probability <= tol.probability.
DensityMatrix post_state(const Instrument& ins, const DensityMatrix& rho, std::size_t k);
DensityMatrix post_state(const Instrument& ins, const DensityMatrix& rho,
                         const std::string& label);

/// Kraus set {second_j first_i}: apply `first`, then `second`.
Channel compose(const Channel& second, const Channel& first);

/// Same map, different Kraus representation: K'_j = sum_i M[j][i] K_i for a
/// unitary M over Kraus indices.
Channel remix_kraus(const Channel& c, const ComplexMatrix& mixing,
                    const Tolerances& tol = default_tolerances());

/// Convex combination: Kraus {sqrt(w) A_i} U {sqrt(1-w) B_j}.
Channel mix_channels(double weight, const Channel& a, const Channel& b);

}  // namespace entrodis
