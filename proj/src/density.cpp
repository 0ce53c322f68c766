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

#include "entrodis/density.hpp"

#include <cmath>
#include <string>

#include "entrodis/errors.hpp"

namespace entrodis {

PureState PureState::from_amplitudes(std::vector<cplx> amps, const Tolerances& tol) {
  if (amps.empty()) throw DimensionError("PureState: empty amplitude vector");
  double norm_sq = 0.0;
  for (const cplx& a : amps) norm_sq += std::norm(a);
  if (std::abs(norm_sq - 1.0) > tol.unit_norm)
    throw ValidationError("PureState: norm^2 deviates from 1 by " +
                          std::to_string(std::abs(norm_sq - 1.0)));
  PureState psi;
  psi.dim = amps.size();
  psi.amplitudes = std::move(amps);
  return psi;
}

PureState PureState::basis_state(std::size_t dim, std::size_t index) {
  if (index >= dim) throw DimensionError("basis_state: index out of range");
  PureState psi;
  psi.dim = dim;
  psi.amplitudes.assign(dim, 0.0);
  psi.amplitudes[index] = 1.0;
  return psi;
}

ComplexMatrix projector(const PureState& psi) { return outer(psi.amplitudes, psi.amplitudes); }

DensityMatrix DensityMatrix::from_matrix(ComplexMatrix m, const Tolerances& tol) {
  if (!m.is_square() || m.rows == 0) throw DimensionError("DensityMatrix: matrix must be square");
  if (!is_hermitian(m, tol.hermiticity)) {
    double worst = 0.0;
    for (std::size_t i = 0; i < m.rows; ++i)
      for (std::size_t j = 0; j < m.cols; ++j)
        worst = std::max(worst, std::abs(m.at(i, j) - std::conj(m.at(j, i))));
    throw ValidationError("DensityMatrix: not Hermitian, residual " + std::to_string(worst));
  }
  const double tr = trace(m).real();
  if (std::abs(tr - 1.0) > tol.trace_one)
    throw ValidationError("DensityMatrix: trace deviates from 1 by " +
                          std::to_string(std::abs(tr - 1.0)));

  EighResult eig = eigh(m, tol);
  for (double& v : eig.values) {
    if (v < -tol.psd)
      throw ValidationError("DensityMatrix: negative eigenvalue " + std::to_string(v));
    if (v < 0.0) v = 0.0;
  }

  DensityMatrix rho;
  rho.dim_ = m.rows;
  rho.matrix_ = std::move(m);
  rho.spectrum_ = std::move(eig.values);
  rho.eigenbasis_ = std::move(eig.vectors);
  return rho;
}

DensityMatrix DensityMatrix::pure(const PureState& psi) {
  return from_matrix(projector(psi));
}

DensityMatrix DensityMatrix::maximally_mixed(std::size_t dim) {
  if (dim == 0) throw DimensionError("maximally_mixed: dim must be positive");
  return from_matrix(scaled(ComplexMatrix::identity(dim), 1.0 / static_cast<double>(dim)));
}

DensityMatrix DensityMatrix::diagonal(const std::vector<double>& probs) {
  ComplexMatrix m(probs.size(), probs.size());
  for (std::size_t i = 0; i < probs.size(); ++i) m.at(i, i) = probs[i];
  return from_matrix(std::move(m));
}

PureState DensityMatrix::eigenvector(std::size_t j) const {
  if (j >= dim_) throw DimensionError("eigenvector: index out of range");
  PureState psi;
  psi.dim = dim_;
  psi.amplitudes = column(eigenbasis_, j);
  return psi;
}

std::size_t DensityMatrix::rank() const {
  // Solver noise leaves ~1e-16 residue on null directions; anything below
  // 1e-12 of the unit trace is not a populated mode.
  std::size_t r = 0;
  for (double v : spectrum_)
    if (v > 1e-12) ++r;
  return r;
}

namespace {
PureState purify_with_reference(const DensityMatrix& rho, std::size_t dref) {
  const std::size_t d = rho.dim();
  std::vector<cplx> amps(d * dref, 0.0);
  for (std::size_t j = 0; j < dref; ++j) {
    const double w = std::sqrt(std::max(rho.spectrum()[j], 0.0));
    if (w == 0.0) continue;
    for (std::size_t q = 0; q < d; ++q) amps[q * dref + j] += w * rho.eigenbasis().at(q, j);
  }
  PureState psi;
  psi.dim = d * dref;
  psi.amplitudes = std::move(amps);
  return psi;
}
}  // namespace

PureState purify(const DensityMatrix& rho) { return purify_with_reference(rho, rho.dim()); }

PureState purify_minimal(const DensityMatrix& rho) {
  const std::size_t r = rho.rank();
  return purify_with_reference(rho, r == 0 ? 1 : r);
}

double trace_distance(const DensityMatrix& a, const DensityMatrix& b) {
  if (a.dim() != b.dim()) throw DimensionError("trace_distance: dimension mismatch");
  const double t = trace_distance_herm(a.matrix(), b.matrix());
  return std::min(std::max(t, 0.0), 1.0);
}

double fidelity(const DensityMatrix& a, const DensityMatrix& b) {
  if (a.dim() != b.dim()) throw DimensionError("fidelity: dimension mismatch");
  return std::min(fidelity_herm(a.matrix(), b.matrix()), 1.0);
}

}  // namespace entrodis
