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

#include "entrodis/channel.hpp"

#include <algorithm>
#include <cmath>

#include "entrodis/errors.hpp"
#include "entrodis/linalg.hpp"

namespace entrodis {

namespace {

ComplexMatrix kraus_gram_sum(const std::vector<ComplexMatrix>& kraus) {
  ComplexMatrix sum(kraus[0].cols, kraus[0].cols);
  for (const ComplexMatrix& k : kraus) accumulate(sum, multiply_hn(k, k));
  return sum;
}

}  // namespace

Channel Channel::from_kraus(std::vector<ComplexMatrix> kraus, const Tolerances& tol) {
  if (kraus.empty()) throw ValidationError("Channel: needs at least one Kraus operator");
  const std::size_t dout = kraus[0].rows, din = kraus[0].cols;
  if (din == 0 || dout == 0) throw DimensionError("Channel: zero-dimensional Kraus operator");
  for (std::size_t i = 1; i < kraus.size(); ++i)
    if (kraus[i].rows != dout || kraus[i].cols != din)
      throw DimensionError("Channel: Kraus operator " + std::to_string(i) +
                           " has inconsistent shape");
  const double residual = max_abs_diff(kraus_gram_sum(kraus), ComplexMatrix::identity(din));
  if (residual > tol.completeness)
    throw ValidationError("Channel: completeness residual " + std::to_string(residual));

  Channel c;
  c.din_ = din;
  c.dout_ = dout;
  c.kraus_ = std::move(kraus);
  return c;
}

Channel Channel::identity(std::size_t dim) {
  return from_kraus({ComplexMatrix::identity(dim)});
}

Channel Channel::unitary(ComplexMatrix u, const Tolerances& tol) {
  if (!u.is_square()) throw DimensionError("unitary channel: matrix not square");
  const double residual = max_abs_diff(multiply_hn(u, u), ComplexMatrix::identity(u.cols));
  if (residual > tol.unitarity)
    throw ValidationError("unitary channel: unitarity residual " + std::to_string(residual));
  std::vector<ComplexMatrix> kraus;
  kraus.push_back(std::move(u));
  return from_kraus(std::move(kraus), tol);
}

Channel Channel::depolarizing_qubit() {
  ComplexMatrix id = ComplexMatrix::identity(2);
  ComplexMatrix x(2, 2), y(2, 2), z(2, 2);
  x.at(0, 1) = 1.0;
  x.at(1, 0) = 1.0;
  y.at(0, 1) = cplx{0.0, -1.0};
  y.at(1, 0) = cplx{0.0, 1.0};
  z.at(0, 0) = 1.0;
  z.at(1, 1) = -1.0;
  std::vector<ComplexMatrix> kraus;
  for (ComplexMatrix* m : {&id, &x, &y, &z}) kraus.push_back(scaled(*m, 0.5));
  return from_kraus(std::move(kraus));
}

Instrument Instrument::from_parts(Channel channel, std::vector<Outcome> outcomes,
                                  const Tolerances& tol) {
  if (outcomes.empty()) throw ValidationError("Instrument: needs at least one outcome");
  const std::size_t n = channel.kraus().size();
  std::vector<bool> used(n, false);
  for (const Outcome& o : outcomes) {
    if (o.kraus_indices.empty())
      throw ValidationError("Instrument: outcome '" + o.label + "' has no Kraus indices");
    for (std::size_t i : o.kraus_indices) {
      if (i >= n)
        throw ValidationError("Instrument: outcome '" + o.label + "' references Kraus index " +
                              std::to_string(i) + " out of range");
      if (used[i])
        throw ValidationError("Instrument: Kraus index " + std::to_string(i) +
                              " assigned to more than one outcome");
      used[i] = true;
    }
  }
  if (!std::all_of(used.begin(), used.end(), [](bool b) { return b; }))
    throw ValidationError("Instrument: outcome index sets do not cover all Kraus operators");

  Instrument ins;
  ins.channel_ = std::move(channel);
  ins.outcomes_ = std::move(outcomes);

  // Each POVM element must be PSD; completeness already holds channel-wide.
  for (const ComplexMatrix& pi : povm(ins)) {
    const EighResult eig = eigh(pi, tol);
    if (!eig.values.empty() && eig.values.back() < -tol.psd)
      throw ValidationError("Instrument: POVM element has negative eigenvalue " +
                            std::to_string(eig.values.back()));
  }
  return ins;
}

Instrument Instrument::trivial(Channel channel) {
  Outcome all;
  all.label = "k0";
  all.kraus_indices.resize(channel.kraus().size());
  for (std::size_t i = 0; i < all.kraus_indices.size(); ++i) all.kraus_indices[i] = i;
  return from_parts(std::move(channel), {std::move(all)});
}

Instrument Instrument::projective(const ComplexMatrix& basis, const Tolerances& tol) {
  if (!basis.is_square()) throw DimensionError("projective: basis matrix not square");
  const std::size_t d = basis.rows;
  const double residual = max_abs_diff(multiply_hn(basis, basis), ComplexMatrix::identity(d));
  if (residual > tol.unitarity)
    throw ValidationError("projective: basis orthonormality residual " + std::to_string(residual));
  std::vector<ComplexMatrix> kraus;
  std::vector<Outcome> outcomes;
  for (std::size_t j = 0; j < d; ++j) {
    const std::vector<cplx> col = column(basis, j);
    kraus.push_back(outer(col, col));
    outcomes.push_back({"k" + std::to_string(j), {j}});
  }
  return from_parts(Channel::from_kraus(std::move(kraus), tol), std::move(outcomes), tol);
}

Instrument Instrument::projective_eigenbasis(const DensityMatrix& rho) {
  return projective(rho.eigenbasis());
}

ComplexMatrix apply_raw(const Channel& c, const ComplexMatrix& op) {
  if (op.rows != c.din() || op.cols != c.din())
    throw DimensionError("apply: operator dimension " + std::to_string(op.rows) +
                         " != channel input dimension " + std::to_string(c.din()));
  ComplexMatrix out(c.dout(), c.dout());
  for (const ComplexMatrix& k : c.kraus()) {
    const ComplexMatrix k_op = multiply(k, op);
    accumulate(out, multiply_nh(k_op, k));
  }
  return out;
}

DensityMatrix apply(const Channel& c, const DensityMatrix& rho) {
  ComplexMatrix out = apply_raw(c, rho.matrix());
  // The Kraus sum is Hermitian PSD up to rounding; pin it down exactly so
  // the result always validates.
  for (std::size_t i = 0; i < out.rows; ++i) {
    for (std::size_t j = i + 1; j < out.cols; ++j) {
      const cplx v = 0.5 * (out.at(i, j) + std::conj(out.at(j, i)));
      out.at(i, j) = v;
      out.at(j, i) = std::conj(v);
    }
    out.at(i, i) = out.at(i, i).real();
  }
  return DensityMatrix::from_matrix(std::move(out));
}

std::vector<ComplexMatrix> povm(const Instrument& ins) {
  std::vector<ComplexMatrix> elements;
  elements.reserve(ins.num_outcomes());
  for (const Outcome& o : ins.outcomes()) {
    ComplexMatrix pi(ins.din(), ins.din());
    for (std::size_t i : o.kraus_indices) {
      const ComplexMatrix& k = ins.channel().kraus()[i];
      accumulate(pi, multiply_hn(k, k));
    }
    elements.push_back(std::move(pi));
  }
  return elements;
}

std::vector<double> outcome_probabilities(const Instrument& ins, const DensityMatrix& rho) {
  if (rho.dim() != ins.din()) throw DimensionError("outcome_probabilities: dimension mismatch");
  std::vector<double> probs;
  probs.reserve(ins.num_outcomes());
  for (const ComplexMatrix& pi : povm(ins)) {
    double p = hs_inner(pi, rho.matrix()).real();  // Tr[Pi rho]; Pi Hermitian
    if (p < -1e-12)
      throw ValidationError("outcome_probabilities: probability " + std::to_string(p));
    probs.push_back(std::max(p, 0.0));
  }
  return probs;
}

DensityMatrix post_state(const Instrument& ins, const DensityMatrix& rho, std::size_t k) {
  if (k >= ins.num_outcomes()) throw DimensionError("post_state: outcome index out of range");
  if (rho.dim() != ins.din()) throw DimensionError("post_state: dimension mismatch");
  const Outcome& o = ins.outcomes()[k];

  ComplexMatrix out(ins.dout(), ins.dout());
  for (std::size_t i : o.kraus_indices) {
    const ComplexMatrix& kop = ins.channel().kraus()[i];
    const ComplexMatrix k_rho = multiply(kop, rho.matrix());
    accumulate(out, multiply_nh(k_rho, kop));
  }
  const double p = trace(out).real();
  if (p <= default_tolerances().probability)
    throw ValidationError("post_state: impossible outcome '" + o.label + "' (probability " +
                          std::to_string(p) + ")");
  out = scaled(out, 1.0 / p);
  for (std::size_t i = 0; i < out.rows; ++i) {
    for (std::size_t j = i + 1; j < out.cols; ++j) {
      const cplx v = 0.5 * (out.at(i, j) + std::conj(out.at(j, i)));
      out.at(i, j) = v;
      out.at(j, i) = std::conj(v);
    }
    out.at(i, i) = out.at(i, i).real();
  }
  return DensityMatrix::from_matrix(std::move(out));
}

DensityMatrix post_state(const Instrument& ins, const DensityMatrix& rho,
                         const std::string& label) {
  for (std::size_t k = 0; k < ins.num_outcomes(); ++k)
    if (ins.outcomes()[k].label == label) return post_state(ins, rho, k);
  throw DimensionError("post_state: no outcome labelled '" + label + "'");
}

Channel compose(const Channel& second, const Channel& first) {
  if (first.dout() != second.din())
    throw DimensionError("compose: first.dout " + std::to_string(first.dout()) +
                         " != second.din " + std::to_string(second.din()));
  std::vector<ComplexMatrix> kraus;
  kraus.reserve(first.kraus().size() * second.kraus().size());
  for (const ComplexMatrix& kj : second.kraus())
    for (const ComplexMatrix& ki : first.kraus()) kraus.push_back(multiply(kj, ki));
  return Channel::from_kraus(std::move(kraus));
}

Channel remix_kraus(const Channel& c, const ComplexMatrix& mixing, const Tolerances& tol) {
  const std::size_t n = c.kraus().size();
  if (mixing.rows != n || mixing.cols != n)
    throw DimensionError("remix_kraus: mixing matrix must be n x n over Kraus indices");
  const double residual = max_abs_diff(multiply_hn(mixing, mixing), ComplexMatrix::identity(n));
  if (residual > tol.unitarity)
    throw ValidationError("remix_kraus: mixing matrix unitarity residual " +
                          std::to_string(residual));
  std::vector<ComplexMatrix> remixed;
  remixed.reserve(n);
  for (std::size_t j = 0; j < n; ++j) {
    ComplexMatrix kj(c.dout(), c.din());
    for (std::size_t i = 0; i < n; ++i) accumulate(kj, c.kraus()[i], mixing.at(j, i));
    remixed.push_back(std::move(kj));
  }
  return Channel::from_kraus(std::move(remixed), tol);
}

Channel mix_channels(double weight, const Channel& a, const Channel& b) {
  if (weight < 0.0 || weight > 1.0) throw DimensionError("mix_channels: weight outside [0, 1]");
  if (a.din() != b.din() || a.dout() != b.dout())
    throw DimensionError("mix_channels: channel shapes differ");
  std::vector<ComplexMatrix> kraus;
  const double wa = std::sqrt(weight), wb = std::sqrt(1.0 - weight);
  if (wa > 0.0)
    for (const ComplexMatrix& k : a.kraus()) kraus.push_back(scaled(k, wa));
  if (wb > 0.0)
    for (const ComplexMatrix& k : b.kraus()) kraus.push_back(scaled(k, wb));
  return Channel::from_kraus(std::move(kraus));
}

}  // namespace entrodis
