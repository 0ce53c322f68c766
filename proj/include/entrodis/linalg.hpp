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

#include "entrodis/matrix.hpp"
#include "entrodis/tolerances.hpp"

namespace entrodis {

struct EighResult {
  std::vector<double> values;    // descending
  ComplexMatrix vectors;         // orthonormal columns, vectors.col(i) <-> values[i]
};

/// Spectral decomposition of a Hermitian matrix by cyclic Jacobi rotations.
/// Eigenvalues come back sorted descending; ties keep the solver's order via
/// a stable sort, so identical input bytes always produce identical output
/// bytes. Throws ValidationError if the input is not Hermitian within
/// tol.hermiticity.
EighResult eigh(const ComplexMatrix& h, const Tolerances& tol = default_tolerances());

/// Reduce a matrix over a tensor-product space to the subsystems listed in
/// `keep` (strictly increasing indices into `dims`). The product of `dims`
/// must equal the matrix dimension; the trace is preserved.
ComplexMatrix partial_trace(const ComplexMatrix& m, const std::vector<std::size_t>& dims,
                            const std::vector<std::size_t>& keep);

/// T(a, b) = Tr|a - b| / 2 over Hermitian inputs of equal dimension.
double trace_distance_herm(const ComplexMatrix& a, const ComplexMatrix& b);

/// Uhlmann fidelity (Tr sqrt(sqrt(a) b sqrt(a)))^2 over PSD unit-trace
/// inputs of equal dimension.
double fidelity_herm(const ComplexMatrix& a, const ComplexMatrix& b);

/// V sqrt(diag(values)) V^dagger with negative values clipped to zero.
ComplexMatrix psd_sqrt(const EighResult& eig);

}  // namespace entrodis
