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
#include <vector>

#include "entrodis/linalg.hpp"
#include "entrodis/matrix.hpp"
#include "entrodis/tolerances.hpp"

namespace entrodis {

/// Unit-norm state vector.
struct PureState {
  std::size_t dim = 0;
  std::vector<cplx> amplitudes;

  static PureState from_amplitudes(std::vector<cplx> amps,
                                   const Tolerances& tol = default_tolerances());
  static PureState basis_state(std::size_t dim, std::size_t index);
};

/// |psi><psi|
ComplexMatrix projector(const PureState& psi);

/// Hermitian, PSD, unit-trace operator with its spectral decomposition
/// computed once at construction. The spectrum is sorted descending;
/// eigenvalues in [-psd_tol, 0) are clipped to zero, anything lower is a
/// validation error.
class DensityMatrix {
 public:
  static DensityMatrix from_matrix(ComplexMatrix m, const Tolerances& tol = default_tolerances());
  static DensityMatrix pure(const PureState& psi);
  static DensityMatrix maximally_mixed(std::size_t dim);
  /// State diagonal in the computational basis with the given probabilities.
  static DensityMatrix diagonal(const std::vector<double>& probs);

  std::size_t dim() const { return dim_; }
  const ComplexMatrix& matrix() const { return matrix_; }
  const std::vector<double>& spectrum() const { return spectrum_; }
  const ComplexMatrix& eigenbasis() const { return eigenbasis_; }
  /// Eigenvector |j> as an amplitude vector.
  PureState eigenvector(std::size_t j) const;
  /// Number of eigenvalues above the clipping threshold.
  std::size_t rank() const;

 private:
  DensityMatrix() = default;
  std::size_t dim_ = 0;
  ComplexMatrix matrix_;
  std::vector<double> spectrum_;
  ComplexMatrix eigenbasis_;
};

/// Canonical spectral purification |Psi> = sum_j sqrt(lambda_j) |j>|j> on a
/// dim^2 space; the reference factor comes second, so tracing out subsystem
/// 1 of {dim, dim} recovers rho.
PureState purify(const DensityMatrix& rho);

/// Purification against a reference of dimension rank(rho) instead of dim;
/// used to confirm purification-independence of derived quantities.
PureState purify_minimal(const DensityMatrix& rho);

double trace_distance(const DensityMatrix& a, const DensityMatrix& b);
double fidelity(const DensityMatrix& a, const DensityMatrix& b);

}  // namespace entrodis
