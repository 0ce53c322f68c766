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

#include "entrodis/matrix.hpp"

#include <algorithm>
#include <cmath>

#include "entrodis/errors.hpp"
#include "entrodis/kernels.hpp"

namespace entrodis {

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
  ComplexMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1.0;
  return m;
}

namespace {
void require_same_shape(const ComplexMatrix& a, const ComplexMatrix& b, const char* op) {
  if (a.rows != b.rows || a.cols != b.cols)
    throw DimensionError(std::string(op) + ": shape mismatch " + std::to_string(a.rows) + "x" +
                         std::to_string(a.cols) + " vs " + std::to_string(b.rows) + "x" +
                         std::to_string(b.cols));
}
}  // namespace

ComplexMatrix multiply(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.cols != b.rows) throw DimensionError("multiply: inner dimensions differ");
  ComplexMatrix c(a.rows, b.cols);
  kernels::matmul(a.data.data(), b.data.data(), c.data.data(), a.rows, a.cols, b.cols);
  return c;
}

ComplexMatrix multiply_nh(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.cols != b.cols) throw DimensionError("multiply_nh: inner dimensions differ");
  ComplexMatrix c(a.rows, b.rows);
  kernels::matmul_nh(a.data.data(), b.data.data(), c.data.data(), a.rows, a.cols, b.rows);
  return c;
}

ComplexMatrix multiply_hn(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows != b.rows) throw DimensionError("multiply_hn: inner dimensions differ");
  ComplexMatrix c(a.cols, b.cols);
  kernels::matmul_hn(a.data.data(), b.data.data(), c.data.data(), a.cols, a.rows, b.cols);
  return c;
}

ComplexMatrix add(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_shape(a, b, "add");
  ComplexMatrix c = a;
  kernels::axpy(1.0, b.data.data(), c.data.data(), c.size());
  return c;
}

ComplexMatrix subtract(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_shape(a, b, "subtract");
  ComplexMatrix c = a;
  kernels::axpy(-1.0, b.data.data(), c.data.data(), c.size());
  return c;
}

ComplexMatrix scaled(const ComplexMatrix& a, cplx factor) {
  ComplexMatrix c(a.rows, a.cols);
  kernels::scale_copy(factor, a.data.data(), c.data.data(), a.size());
  return c;
}

void accumulate(ComplexMatrix& target, const ComplexMatrix& term, cplx factor) {
  require_same_shape(target, term, "accumulate");
  kernels::axpy(factor, term.data.data(), target.data.data(), target.size());
}

ComplexMatrix adjoint(const ComplexMatrix& a) {
  ComplexMatrix c(a.cols, a.rows);
  for (std::size_t i = 0; i < a.rows; ++i)
    for (std::size_t j = 0; j < a.cols; ++j) c.at(j, i) = std::conj(a.at(i, j));
  return c;
}

cplx trace(const ComplexMatrix& a) {
  if (!a.is_square()) throw DimensionError("trace: matrix not square");
  cplx t = 0.0;
  for (std::size_t i = 0; i < a.rows; ++i) t += a.at(i, i);
  return t;
}

cplx hs_inner(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_shape(a, b, "hs_inner");
  return kernels::hs_dot(a.data.data(), b.data.data(), a.size());
}

double max_abs(const ComplexMatrix& a) {
  double m = 0.0;
  for (const cplx& v : a.data) m = std::max(m, std::abs(v));
  return m;
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_shape(a, b, "max_abs_diff");
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a.data[i] - b.data[i]));
  return m;
}

bool is_hermitian(const ComplexMatrix& a, double tol) {
  if (!a.is_square()) return false;
  for (std::size_t i = 0; i < a.rows; ++i)
    for (std::size_t j = i; j < a.cols; ++j)
      if (std::abs(a.at(i, j) - std::conj(a.at(j, i))) > tol) return false;
  return true;
}

ComplexMatrix tensor(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix c(a.rows * b.rows, a.cols * b.cols);
  for (std::size_t ia = 0; ia < a.rows; ++ia) {
    for (std::size_t ja = 0; ja < a.cols; ++ja) {
      const cplx f = a.at(ia, ja);
      for (std::size_t ib = 0; ib < b.rows; ++ib) {
        cplx* dst = c.data.data() + (ia * b.rows + ib) * c.cols + ja * b.cols;
        kernels::scale_copy(f, b.data.data() + ib * b.cols, dst, b.cols);
      }
    }
  }
  return c;
}

std::vector<cplx> column(const ComplexMatrix& a, std::size_t j) {
  std::vector<cplx> v(a.rows);
  for (std::size_t i = 0; i < a.rows; ++i) v[i] = a.at(i, j);
  return v;
}

ComplexMatrix outer(const std::vector<cplx>& u, const std::vector<cplx>& v) {
  ComplexMatrix c(u.size(), v.size());
  for (std::size_t i = 0; i < u.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j) c.at(i, j) = u[i] * std::conj(v[j]);
  return c;
}

}  // namespace entrodis
