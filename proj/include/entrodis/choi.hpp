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

#include <optional>

#include "entrodis/channel.hpp"
#include "entrodis/matrix.hpp"

namespace entrodis {

/// Choi operator (Q (x) 1)|Omega><Omega| on the unnormalized maximally
/// entangled vector |Omega> = sum_i |i>|i>; output factor first, so the
/// matrix is (dout*din) x (dout*din), PSD, with Tr_out = I_din.
struct ChoiMatrix {
  ComplexMatrix matrix;
  std::size_t din = 0, dout = 0;

  static ChoiMatrix from_matrix(ComplexMatrix m, std::size_t din, std::size_t dout,
                                double psd_tol, double tp_tol);
};

ChoiMatrix choi(const Channel& c, const Tolerances& tol = default_tolerances());

/// Largest weight xi such that Choi(q) - xi * Choi(c) stays PSD, found by
/// bisection; when xi < 1 the PSD remainder normalized by (1 - xi) is the
/// dynamical component.
struct Decomposition {
  double xi = 0.0;
  Channel informational;
  std::optional<ChoiMatrix> dynamical;
};

Decomposition decompose_xi(const Channel& q, const Channel& c,
                           const Tolerances& tol = default_tolerances());

/// The channel that replaces any input by `reference` weighted by the
/// populations measured in its eigenbasis: Kraus sqrt(mu_j)|v_j><v_k|,
/// grouped by k. It fixes `reference` and its POVM is the set of eigenbasis
/// projectors.
Instrument informational_map(const DensityMatrix& reference);

}  // namespace entrodis
