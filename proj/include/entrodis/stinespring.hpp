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

#include "entrodis/channel.hpp"
#include "entrodis/matrix.hpp"

namespace entrodis {

/// Isometric dilation V = sum_i K_i (x) |e_i> of an instrument, mapping the
/// input space into output (x) probe. The probe basis follows Kraus list
/// order, so outcome k is read out by the projector sum_{i in I_k}
/// |e_i><e_i| on the probe factor.
struct StinespringModel {
  ComplexMatrix isometry;  // (dout * denv) x din, output factor first
  std::size_t din = 0, dout = 0, denv = 0;
  std::vector<PureState> probe_basis;  // |e_i>, one per Kraus operator

  /// V rho V^dagger on the joint output (x) probe space.
  ComplexMatrix dilate(const DensityMatrix& rho) const;
  /// Probe-side projector of outcome k.
  ComplexMatrix outcome_projector(const Instrument& ins, std::size_t k) const;
};

StinespringModel stinespring(const Instrument& ins);

/// The channel into the probe: rho -> Tr_out[V rho V^dagger]. Its Kraus
/// operators F_m (one per output-space basis vector) are sliced out of the
/// dilation, (F_m)[i][n] = (K_i)[m][n].
Channel complementary(const Instrument& ins);

}  // namespace entrodis
