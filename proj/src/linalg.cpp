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

#include "entrodis/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "entrodis/errors.hpp"

namespace entrodis {

namespace {

double offdiag_sq(const ComplexMatrix& a) {
  double s = 0.0;
  for (std::size_t p = 0; p < a.rows; ++p)
    for (std::size_t q = p + 1; q < a.cols; ++q) s += std::norm(a.at(p, q));
  return s;
}

}  // namespace

EighResult eigh(const ComplexMatrix& h, const Tolerances& tol) {
  if (!h.is_square()) throw DimensionError("eigh: matrix not square");
  const std::size_t n = h.rows;
  if (!is_hermitian(h, tol.hermiticity))
    throw ValidationError("eigh: input not Hermitian within " + std::to_string(tol.hermiticity));

  // Work on the symmetrized copy; rounding in callers may leave the input a
  // hair off Hermitian and Jacobi assumes it exactly.
  ComplexMatrix a(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      a.at(i, j) = 0.5 * (h.at(i, j) + std::conj(h.at(j, i)));

  ComplexMatrix v = ComplexMatrix::identity(n);

  double scale = 0.0;
  for (const cplx& e : a.data) scale += std::norm(e);
  scale = std::sqrt(scale);
  if (scale == 0.0 || n == 1) {
    EighResult res;
    res.values.resize(n);
    for (std::size_t i = 0; i < n; ++i) res.values[i] = a.at(i, i).real();
    res.vectors = v;
    // fall through to the shared sort below via the small helper
    std::vector<std::size_t> idx(n);
    std::iota(idx.begin(), idx.end(), 0);
    std::stable_sort(idx.begin(), idx.end(),
                     [&](std::size_t x, std::size_t y) { return res.values[x] > res.values[y]; });
    EighResult sorted;
    sorted.values.resize(n);
    sorted.vectors = ComplexMatrix(n, n);
    for (std::size_t c = 0; c < n; ++c) {
      sorted.values[c] = res.values[idx[c]];
      for (std::size_t r = 0; r < n; ++r) sorted.vectors.at(r, c) = res.vectors.at(r, idx[c]);
    }
    return sorted;
  }

  const double conv = 1e-15 * scale;
  const int max_sweeps = 60;
  int sweep = 0;
  for (; sweep < max_sweeps; ++sweep) {
    if (std::sqrt(offdiag_sq(a)) <= conv) break;
    for (std::size_t p = 0; p < n - 1; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const cplx g = a.at(p, q);
        const double r = std::abs(g);
        if (r <= 1e-18 * scale) {
          a.at(p, q) = 0.0;
          a.at(q, p) = 0.0;
          continue;
        }
        const double alpha = a.at(p, p).real();
        const double beta = a.at(q, q).real();
        const cplx phase = g / r;  // g = r * phase

        // Rotate in the (p,q) plane: columns (p,q) map through
        // [[c, -conj(s)], [s, c]] with s = sigma * conj(phase). Zeroing the
        // (p,q) entry needs t = sigma/c solving t^2 - 2*theta*t - 1 = 0;
        // the smaller-|t| root keeps the rotation stable.
        const double theta = (beta - alpha) / (2.0 * r);
        double t;
        if (theta >= 0.0)
          t = -1.0 / (theta + std::sqrt(1.0 + theta * theta));
        else
          t = 1.0 / (-theta + std::sqrt(1.0 + theta * theta));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double sigma = t * c;
        const cplx s = sigma * std::conj(phase);
        const cplx sbar = std::conj(s);

        // Row update (J^dagger A): row_p' = c*row_p + conj(s)*row_q.
        for (std::size_t j = 0; j < n; ++j) {
          const cplx apj = a.at(p, j);
          const cplx aqj = a.at(q, j);
          a.at(p, j) = c * apj + sbar * aqj;
          a.at(q, j) = -s * apj + c * aqj;
        }
        // Column update (A J): col_p' = c*col_p + s*col_q.
        for (std::size_t i = 0; i < n; ++i) {
          const cplx aip = a.at(i, p);
          const cplx aiq = a.at(i, q);
          a.at(i, p) = c * aip + s * aiq;
          a.at(i, q) = -sbar * aip + c * aiq;
        }
        a.at(p, q) = 0.0;
        a.at(q, p) = 0.0;
        a.at(p, p) = a.at(p, p).real();
        a.at(q, q) = a.at(q, q).real();

        for (std::size_t i = 0; i < n; ++i) {
          const cplx vip = v.at(i, p);
          const cplx viq = v.at(i, q);
          v.at(i, p) = c * vip + s * viq;
          v.at(i, q) = -sbar * vip + c * viq;
        }
      }
    }
  }
  if (sweep == max_sweeps && std::sqrt(offdiag_sq(a)) > 1e-12 * scale)
    throw std::runtime_error("eigh: Jacobi iteration failed to converge");

  std::vector<double> values(n);
  for (std::size_t i = 0; i < n; ++i) values[i] = a.at(i, i).real();

  std::vector<std::size_t> idx(n);
  std::iota(idx.begin(), idx.end(), 0);
  std::stable_sort(idx.begin(), idx.end(),
                   [&](std::size_t x, std::size_t y) { return values[x] > values[y]; });

  EighResult res;
  res.values.resize(n);
  res.vectors = ComplexMatrix(n, n);
  for (std::size_t col = 0; col < n; ++col) {
    res.values[col] = values[idx[col]];
    for (std::size_t row = 0; row < n; ++row) res.vectors.at(row, col) = v.at(row, idx[col]);
  }
  return res;
}

ComplexMatrix partial_trace(const ComplexMatrix& m, const std::vector<std::size_t>& dims,
                            const std::vector<std::size_t>& keep) {
  if (!m.is_square()) throw DimensionError("partial_trace: matrix not square");
  std::size_t total = 1;
  for (std::size_t d : dims) total *= d;
  if (total != m.rows)
    throw DimensionError("partial_trace: product of dims " + std::to_string(total) +
                         " != matrix dimension " + std::to_string(m.rows));
  for (std::size_t i = 0; i < keep.size(); ++i) {
    if (keep[i] >= dims.size()) throw DimensionError("partial_trace: keep index out of range");
    if (i > 0 && keep[i] <= keep[i - 1])
      throw DimensionError("partial_trace: keep indices must be strictly increasing");
  }

  const std::size_t nsub = dims.size();
  std::vector<bool> kept(nsub, false);
  for (std::size_t k : keep) kept[k] = true;

  // Row-major strides of each subsystem index within the full space.
  std::vector<std::size_t> stride(nsub, 1);
  for (std::size_t s = nsub; s-- > 1;) stride[s - 1] = stride[s] * dims[s];

  std::size_t dim_keep = 1, dim_tr = 1;
  std::vector<std::size_t> keep_dims, tr_strides;
  std::vector<std::size_t> keep_strides;
  for (std::size_t s = 0; s < nsub; ++s) {
    if (kept[s]) {
      keep_dims.push_back(dims[s]);
      keep_strides.push_back(stride[s]);
      dim_keep *= dims[s];
    } else {
      tr_strides.push_back(stride[s]);
      dim_tr *= dims[s];
    }
  }
  std::vector<std::size_t> tr_dims;
  for (std::size_t s = 0; s < nsub; ++s)
    if (!kept[s]) tr_dims.push_back(dims[s]);

  // Offsets of every kept / traced multi-index into the full space.
  auto offsets = [](const std::vector<std::size_t>& subdims,
                    const std::vector<std::size_t>& substrides, std::size_t count) {
    std::vector<std::size_t> out(count, 0);
    for (std::size_t flat = 0; flat < count; ++flat) {
      std::size_t rem = flat;
      for (std::size_t s = subdims.size(); s-- > 0;) {
        out[flat] += (rem % subdims[s]) * substrides[s];
        rem /= subdims[s];
      }
    }
    return out;
  };
  const std::vector<std::size_t> keep_off = offsets(keep_dims, keep_strides, dim_keep);
  const std::vector<std::size_t> tr_off = offsets(tr_dims, tr_strides, dim_tr);

  ComplexMatrix out(dim_keep, dim_keep);
  for (std::size_t a = 0; a < dim_keep; ++a) {
    for (std::size_t b = 0; b < dim_keep; ++b) {
      cplx acc = 0.0;
      for (std::size_t t = 0; t < dim_tr; ++t)
        acc += m.at(keep_off[a] + tr_off[t], keep_off[b] + tr_off[t]);
      out.at(a, b) = acc;
    }
  }
  return out;
}

double trace_distance_herm(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows != b.rows || a.cols != b.cols)
    throw DimensionError("trace_distance: dimension mismatch");
  const EighResult eig = eigh(subtract(a, b));
  double sum = 0.0;
  for (double v : eig.values) sum += std::abs(v);
  return 0.5 * sum;
}

ComplexMatrix psd_sqrt(const EighResult& eig) {
  const std::size_t n = eig.values.size();
  // Zero out eigenvalues at solver-noise level: the square root would
  // amplify a 1e-16 null-space residual to a 1e-8 matrix entry.
  const double cutoff = 1e-13 * std::max(eig.values.empty() ? 0.0 : eig.values.front(), 0.0);
  ComplexMatrix scaled_vecs(n, n);
  for (std::size_t c = 0; c < n; ++c) {
    const double v = eig.values[c];
    const double s = v > cutoff ? std::sqrt(v) : 0.0;
    for (std::size_t r = 0; r < n; ++r) scaled_vecs.at(r, c) = eig.vectors.at(r, c) * s;
  }
  return multiply_nh(scaled_vecs, eig.vectors);
}

double fidelity_herm(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows != b.rows || a.cols != b.cols) throw DimensionError("fidelity: dimension mismatch");
  const ComplexMatrix sqrt_a = psd_sqrt(eigh(a));
  ComplexMatrix inner = multiply(multiply(sqrt_a, b), sqrt_a);
  // Symmetrize before the final decomposition; the triple product picks up
  // rounding off the Hermitian axis.
  for (std::size_t i = 0; i < inner.rows; ++i)
    for (std::size_t j = i; j < inner.cols; ++j) {
      const cplx m = 0.5 * (inner.at(i, j) + std::conj(inner.at(j, i)));
      inner.at(i, j) = m;
      inner.at(j, i) = std::conj(m);
    }
  const EighResult eig = eigh(inner);
  const double cutoff = 1e-13 * std::max(eig.values.empty() ? 0.0 : eig.values.front(), 0.0);
  double root_sum = 0.0;
  for (double v : eig.values)
    if (v > cutoff) root_sum += std::sqrt(v);
  const double f = root_sum * root_sum;
  return std::min(std::max(f, 0.0), 1.0 + 1e-12);
}

}  // namespace entrodis
