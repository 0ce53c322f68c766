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

#include "entrodis/choi.hpp"

#include <cmath>
#include <string>

#include "entrodis/errors.hpp"
#include "entrodis/linalg.hpp"

namespace entrodis {

ChoiMatrix ChoiMatrix::from_matrix(ComplexMatrix m, std::size_t din, std::size_t dout,
                                   double psd_tol, double tp_tol) {
  if (m.rows != din * dout || !m.is_square())
    throw DimensionError("ChoiMatrix: matrix must be (dout*din) square");
  const EighResult eig = eigh(m);
  if (eig.values.back() < -psd_tol)
    throw ValidationError("ChoiMatrix: negative eigenvalue " + std::to_string(eig.values.back()));
  const ComplexMatrix reduced = partial_trace(m, {dout, din}, {1});
  const double tp_residual = max_abs_diff(reduced, ComplexMatrix::identity(din));
  if (tp_residual > tp_tol)
    throw ValidationError("ChoiMatrix: trace-preservation residual " +
                          std::to_string(tp_residual));
  ChoiMatrix c;
  c.matrix = std::move(m);
  c.din = din;
  c.dout = dout;
  return c;
}

ChoiMatrix choi(const Channel& c, const Tolerances& tol) {
  // (K (x) 1)|Omega> is the row-major flattening of K, so the Choi operator
  // is the sum of outer products of the flattened Kraus operators.
  const std::size_t dim = c.din() * c.dout();
  ComplexMatrix j(dim, dim);
  for (const ComplexMatrix& k : c.kraus()) {
    for (std::size_t r = 0; r < dim; ++r) {
      const cplx kr = k.data[r];
      if (kr == cplx{0.0, 0.0}) continue;
      for (std::size_t s = 0; s < dim; ++s) j.at(r, s) += kr * std::conj(k.data[s]);
    }
  }
  return ChoiMatrix::from_matrix(std::move(j), c.din(), c.dout(), tol.psd, tol.completeness);
}

Decomposition decompose_xi(const Channel& q, const Channel& c, const Tolerances& tol) {
  if (q.din() != c.din() || q.dout() != c.dout())
    throw DimensionError("decompose_xi: channel shapes differ");
  const ChoiMatrix jq = choi(q, tol);
  const ChoiMatrix jc = choi(c, tol);

  const auto min_eig_at = [&](double xi) {
    ComplexMatrix diff = jq.matrix;
    accumulate(diff, jc.matrix, -xi);
    return eigh(diff).values.back();
  };
  const auto feasible = [&](double xi) { return min_eig_at(xi) >= -tol.psd; };

  Decomposition dec{0.0, c, std::nullopt};

  if (feasible(1.0)) {
    dec.xi = 1.0;
    return dec;
  }
  double lo = 0.0, hi = 1.0;
  for (int iter = 0; iter < 60 && hi - lo > tol.xi_bisection; ++iter) {
    const double mid = 0.5 * (lo + hi);
    (feasible(mid) ? lo : hi) = mid;
  }
  dec.xi = lo;

  ComplexMatrix remainder = jq.matrix;
  accumulate(remainder, jc.matrix, -dec.xi);
  const double inflate = 1.0 / (1.0 - dec.xi);
  remainder = scaled(remainder, inflate);
  // Tolerances inflate with the normalization; the remainder inherits the
  // bisection feasibility margin, not a fresh one.
  dec.dynamical = ChoiMatrix::from_matrix(std::move(remainder), q.din(), q.dout(),
                                          2.0 * tol.psd * inflate,
                                          2.0 * tol.completeness * inflate);
  return dec;
}

Instrument informational_map(const DensityMatrix& reference) {
  const std::size_t d = reference.dim();
  std::vector<double> mu = reference.spectrum();
  double total = 0.0;
  for (double m : mu) total += m;
  for (double& m : mu) m /= total;

  std::vector<ComplexMatrix> kraus;
  std::vector<Outcome> outcomes;
  kraus.reserve(d * d);
  for (std::size_t k = 0; k < d; ++k) {
    Outcome o;
    o.label = "k" + std::to_string(k);
    const std::vector<cplx> vk = column(reference.eigenbasis(), k);
    for (std::size_t j = 0; j < d; ++j) {
      std::vector<cplx> vj = column(reference.eigenbasis(), j);
      const double w = std::sqrt(std::max(mu[j], 0.0));
      for (cplx& a : vj) a *= w;
      o.kraus_indices.push_back(kraus.size());
      kraus.push_back(outer(vj, vk));
    }
    outcomes.push_back(std::move(o));
  }
  return Instrument::from_parts(Channel::from_kraus(std::move(kraus)), std::move(outcomes));
}

}  // namespace entrodis
