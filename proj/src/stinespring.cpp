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

#include "entrodis/stinespring.hpp"

#include "entrodis/errors.hpp"

namespace entrodis {

ComplexMatrix StinespringModel::dilate(const DensityMatrix& rho) const {
  if (rho.dim() != din) throw DimensionError("dilate: state dimension mismatch");
  const ComplexMatrix v_rho = multiply(isometry, rho.matrix());
  return multiply_nh(v_rho, isometry);
}

ComplexMatrix StinespringModel::outcome_projector(const Instrument& ins, std::size_t k) const {
  if (k >= ins.num_outcomes()) throw DimensionError("outcome_projector: index out of range");
  ComplexMatrix p(denv, denv);
  for (std::size_t i : ins.outcomes()[k].kraus_indices) p.at(i, i) = 1.0;
  return p;
}

StinespringModel stinespring(const Instrument& ins) {
  const std::size_t din = ins.din(), dout = ins.dout();
  const std::size_t denv = ins.channel().kraus().size();

  StinespringModel model;
  model.din = din;
  model.dout = dout;
  model.denv = denv;
  model.isometry = ComplexMatrix(dout * denv, din);
  // Joint index (m, i) -> row m * denv + i: output factor first, probe second.
  for (std::size_t i = 0; i < denv; ++i) {
    const ComplexMatrix& k = ins.channel().kraus()[i];
    for (std::size_t m = 0; m < dout; ++m)
      for (std::size_t n = 0; n < din; ++n) model.isometry.at(m * denv + i, n) = k.at(m, n);
  }
  model.probe_basis.reserve(denv);
  for (std::size_t i = 0; i < denv; ++i) model.probe_basis.push_back(PureState::basis_state(denv, i));
  return model;
}

Channel complementary(const Instrument& ins) {
  const std::size_t din = ins.din(), dout = ins.dout();
  const std::size_t denv = ins.channel().kraus().size();
  std::vector<ComplexMatrix> slices;
  slices.reserve(dout);
  for (std::size_t m = 0; m < dout; ++m) {
    ComplexMatrix f(denv, din);
    for (std::size_t i = 0; i < denv; ++i)
      for (std::size_t n = 0; n < din; ++n) f.at(i, n) = ins.channel().kraus()[i].at(m, n);
    slices.push_back(std::move(f));
  }
  return Channel::from_kraus(std::move(slices));
}

}  // namespace entrodis
