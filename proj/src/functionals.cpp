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

#include "entrodis/functionals.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "entrodis/errors.hpp"
#include "entrodis/linalg.hpp"
#include "entrodis/stinespring.hpp"

namespace entrodis {

namespace {

constexpr double kZeroProb = 1e-15;  // joint-distribution entries below this count as 0

double entropy_of_values(std::span<const double> values, double psd_tol) {
  double s = 0.0;
  for (double v : values) {
    if (v < -psd_tol)
      throw ValidationError("entropy: negative eigenvalue " + std::to_string(v));
    if (v > kZeroProb) s -= v * std::log2(v);
  }
  return s;
}

/// Entropy of a Hermitian PSD trace-one operator given as a raw matrix.
double entropy_of_herm(const ComplexMatrix& m) {
  return entropy_of_values(eigh(m).values, default_tolerances().psd);
}

ComplexMatrix sqrt_from_decomposition(const DensityMatrix& rho) {
  const std::size_t d = rho.dim();
  ComplexMatrix scaled_vecs(d, d);
  for (std::size_t c = 0; c < d; ++c) {
    const double s = std::sqrt(std::max(rho.spectrum()[c], 0.0));
    for (std::size_t r = 0; r < d; ++r) scaled_vecs.at(r, c) = rho.eigenbasis().at(r, c) * s;
  }
  return multiply_nh(scaled_vecs, rho.eigenbasis());
}

}  // namespace

double shannon_entropy(std::span<const double> probs, const Tolerances& tol) {
  double sum = 0.0;
  for (double p : probs) {
    if (p < -1e-12)
      throw ValidationError("shannon_entropy: negative probability " + std::to_string(p));
    sum += p;
  }
  if (std::abs(sum - 1.0) > tol.distribution_sum)
    throw ValidationError("shannon_entropy: probabilities sum to " + std::to_string(sum));
  double s = 0.0;
  for (double p : probs)
    if (p > kZeroProb) s -= p * std::log2(p);
  return s;
}

double binary_entropy(double p) {
  double s = 0.0;
  if (p > kZeroProb) s -= p * std::log2(p);
  if (1.0 - p > kZeroProb) s -= (1.0 - p) * std::log2(1.0 - p);
  return s;
}

double von_neumann_entropy(const DensityMatrix& rho) {
  return entropy_of_values(rho.spectrum(), default_tolerances().psd);
}

WMatrix w_matrix(const Channel& c, const DensityMatrix& rho) {
  if (rho.dim() != c.din()) throw DimensionError("w_matrix: dimension mismatch");
  const std::size_t n = c.kraus().size();
  WMatrix w;
  w.matrix = ComplexMatrix(n, n);
  std::vector<ComplexMatrix> k_rho(n);
  for (std::size_t i = 0; i < n; ++i) k_rho[i] = multiply(c.kraus()[i], rho.matrix());
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      // Tr[K_i rho K_j^dagger] = Tr[(K_j)^dagger (K_i rho)] = <K_j, K_i rho>
      const cplx v = hs_inner(c.kraus()[j], k_rho[i]);
      w.matrix.at(i, j) = (i == j) ? cplx{v.real(), 0.0} : v;
      if (i != j) w.matrix.at(j, i) = std::conj(v);
    }
  }
  return w;
}

double exchange_entropy(const Channel& c, const DensityMatrix& rho) {
  if (rho.dim() != c.din()) throw DimensionError("exchange_entropy: dimension mismatch");
  const std::size_t n = c.kraus().size();
  const std::size_t dim_op = c.din() * c.dout();
  if (n <= dim_op) return entropy_of_herm(w_matrix(c, rho).matrix);

  // W is the Gram matrix of the operators K_i sqrt(rho); for n > din*dout
  // its nonzero spectrum lives on the much smaller frame operator.
  const ComplexMatrix root = sqrt_from_decomposition(rho);
  ComplexMatrix frame(dim_op, dim_op);
  for (const ComplexMatrix& k : c.kraus()) {
    const ComplexMatrix x = multiply(k, root);
    for (std::size_t r = 0; r < dim_op; ++r) {
      const cplx xr = x.data[r];
      if (xr == cplx{0.0, 0.0}) continue;
      for (std::size_t s = 0; s < dim_op; ++s) frame.at(r, s) += xr * std::conj(x.data[s]);
    }
  }
  return entropy_of_herm(frame);
}

double exchange_entropy_via_purification(const Channel& c, const DensityMatrix& rho,
                                         bool minimal) {
  if (rho.dim() != c.din()) throw DimensionError("exchange_entropy: dimension mismatch");
  const PureState psi = minimal ? purify_minimal(rho) : purify(rho);
  const std::size_t dref = psi.dim / rho.dim();
  // (K (x) 1)|Psi> is the flattening of K * M, with M the din x dref
  // matrix reshape of |Psi|.
  ComplexMatrix m(rho.dim(), dref);
  m.data = psi.amplitudes;
  const std::size_t dim_out = c.dout() * dref;
  ComplexMatrix joint(dim_out, dim_out);
  for (const ComplexMatrix& k : c.kraus()) {
    const ComplexMatrix km = multiply(k, m);
    for (std::size_t r = 0; r < dim_out; ++r) {
      const cplx v = km.data[r];
      if (v == cplx{0.0, 0.0}) continue;
      for (std::size_t s = 0; s < dim_out; ++s) joint.at(r, s) += v * std::conj(km.data[s]);
    }
  }
  return entropy_of_herm(joint);
}

double coherent_information(const Channel& c, const DensityMatrix& rho) {
  return von_neumann_entropy(apply(c, rho)) - exchange_entropy(c, rho);
}

double disturbance(const Channel& c, const DensityMatrix& rho) {
  return von_neumann_entropy(rho) - coherent_information(c, rho);
}

double mutual_information_in_basis(const Instrument& ins, std::span<const double> spectrum,
                                   const ComplexMatrix& basis) {
  if (basis.rows != ins.din() || spectrum.size() != ins.din())
    throw DimensionError("mutual_information: basis dimension mismatch");
  const std::size_t d = ins.din();
  const std::size_t num_k = ins.num_outcomes();
  const std::vector<ComplexMatrix> elements = povm(ins);

  // p(j, k) = lambda_j <v_j| Pi_k |v_j>
  std::vector<double> joint(d * num_k, 0.0);
  for (std::size_t k = 0; k < num_k; ++k) {
    for (std::size_t j = 0; j < d; ++j) {
      if (spectrum[j] <= kZeroProb) continue;
      cplx quad = 0.0;
      for (std::size_t r = 0; r < d; ++r) {
        cplx row = 0.0;
        for (std::size_t s = 0; s < d; ++s) row += elements[k].at(r, s) * basis.at(s, j);
        quad += std::conj(basis.at(r, j)) * row;
      }
      double overlap = quad.real();
      if (overlap < -default_tolerances().psd)
        throw ValidationError("mutual_information: POVM quadratic form " +
                              std::to_string(overlap));
      joint[j * num_k + k] = spectrum[j] * std::max(overlap, 0.0);
    }
  }

  std::vector<double> pj(d, 0.0), pk(num_k, 0.0);
  for (std::size_t j = 0; j < d; ++j)
    for (std::size_t k = 0; k < num_k; ++k) {
      pj[j] += joint[j * num_k + k];
      pk[k] += joint[j * num_k + k];
    }
  double info = 0.0;
  for (std::size_t j = 0; j < d; ++j)
    for (std::size_t k = 0; k < num_k; ++k) {
      const double p = joint[j * num_k + k];
      if (p > kZeroProb) info += p * std::log2(p / (pj[j] * pk[k]));
    }
  return std::max(info, 0.0);
}

double mutual_information(const Instrument& ins, const DensityMatrix& rho) {
  if (rho.dim() != ins.din()) throw DimensionError("mutual_information: dimension mismatch");
  return mutual_information_in_basis(ins, rho.spectrum(), rho.eigenbasis());
}

double holevo_chi(const Instrument& ins, const DensityMatrix& rho) {
  if (rho.dim() != ins.din()) throw DimensionError("holevo_chi: dimension mismatch");
  const Channel comp = complementary(ins);
  double chi = entropy_of_herm(apply_raw(comp, rho.matrix()));
  for (std::size_t j = 0; j < rho.dim(); ++j) {
    const double lambda = rho.spectrum()[j];
    if (lambda <= kZeroProb) continue;
    const ComplexMatrix pj = projector(rho.eigenvector(j));
    chi -= lambda * entropy_of_herm(apply_raw(comp, pj));
  }
  return chi;
}

double entanglement_fidelity(const Channel& c, const DensityMatrix& rho) {
  if (rho.dim() != c.din()) throw DimensionError("entanglement_fidelity: dimension mismatch");
  if (c.din() != c.dout())
    throw DimensionError("entanglement_fidelity: input and output dimensions differ");
  double fe = 0.0;
  for (const ComplexMatrix& k : c.kraus()) {
    // Tr[K rho]
    cplx t = 0.0;
    for (std::size_t i = 0; i < k.rows; ++i) {
      cplx row = 0.0;
      for (std::size_t s = 0; s < k.cols; ++s) row += k.at(i, s) * rho.matrix().at(s, i);
      t += row;
    }
    fe += std::norm(t);
  }
  return fe;
}

FidelityComparators fidelity_disturbances(const Channel& c, const DensityMatrix& rho) {
  if (c.din() != c.dout())
    throw DimensionError("fidelity_disturbances: input and output dimensions differ");
  const DensityMatrix out = apply(c, rho);
  FidelityComparators fc;
  fc.fidelity_disturbance = 1.0 - fidelity(rho, out);
  fc.entanglement_fidelity_disturbance = 1.0 - entanglement_fidelity(c, rho);
  double overlap = 0.0;
  for (std::size_t i = 0; i < rho.dim(); ++i)
    overlap += std::sqrt(std::max(rho.spectrum()[i], 0.0) * std::max(out.spectrum()[i], 0.0));
  fc.dbar = 1.0 - std::min(overlap * overlap, 1.0);
  fc.fidelity_disturbance = std::max(fc.fidelity_disturbance, 0.0);
  fc.entanglement_fidelity_disturbance = std::max(fc.entanglement_fidelity_disturbance, 0.0);
  fc.dbar = std::max(fc.dbar, 0.0);
  return fc;
}

StateIndependent state_independent(const Instrument& ins) {
  const DensityMatrix mixed = DensityMatrix::maximally_mixed(ins.din());
  StateIndependent si;
  si.info = mutual_information(ins, mixed);
  si.dist = disturbance(ins.channel(), mixed);
  return si;
}

double fannes_audenaert_bound(double t, std::size_t d) {
  if (t <= 0.0) return 0.0;
  double bound = binary_entropy(t);
  if (d > 2) bound += t * std::log2(static_cast<double>(d - 1));
  return bound;
}

TradeoffReport full_report(const Instrument& ins, const DensityMatrix& rho) {
  if (rho.dim() != ins.din()) throw DimensionError("full_report: dimension mismatch");
  TradeoffReport r;
  r.din = ins.din();
  r.dout = ins.dout();
  r.s_rho = von_neumann_entropy(rho);
  r.s_out = von_neumann_entropy(apply(ins.channel(), rho));
  r.s_exchange = exchange_entropy(ins.channel(), rho);
  r.i_coherent = r.s_out - r.s_exchange;
  r.disturbance = r.s_rho - r.i_coherent;
  r.mutual_info = mutual_information(ins, rho);
  r.holevo_rhs = holevo_chi(ins, rho);
  const double log_d = std::log2(static_cast<double>(ins.din()));
  r.normalized_i = log_d > 0.0 ? r.mutual_info / log_d : 0.0;
  r.normalized_d = log_d > 0.0 ? r.disturbance / log_d : 0.0;
  if (ins.din() == ins.dout()) {
    const FidelityComparators fc = fidelity_disturbances(ins.channel(), rho);
    r.fid_disturbance = fc.fidelity_disturbance;
    r.ent_fid_disturbance = fc.entanglement_fidelity_disturbance;
    r.dbar = fc.dbar;
  } else {
    r.fid_disturbance = std::numeric_limits<double>::quiet_NaN();
    r.ent_fid_disturbance = std::numeric_limits<double>::quiet_NaN();
    r.dbar = std::numeric_limits<double>::quiet_NaN();
  }
  r.slack = r.disturbance - r.mutual_info;
  return r;
}

}  // namespace entrodis
