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

// Scalar reference kernels. These define the semantics the SIMD variants
// are tested against; keep them simple and obviously correct.

#include "entrodis/kernels.hpp"

namespace entrodis::kernels::detail {

namespace {

void matmul_scalar(const cplx* a, const cplx* b, cplx* c,
                   std::size_t m, std::size_t k, std::size_t n) {
  for (std::size_t i = 0; i < m; ++i) {
    cplx* crow = c + i * n;
    for (std::size_t j = 0; j < n; ++j) crow[j] = 0.0;
    for (std::size_t l = 0; l < k; ++l) {
      const cplx ail = a[i * k + l];
      if (ail == cplx{0.0, 0.0}) continue;
      const cplx* brow = b + l * n;
      for (std::size_t j = 0; j < n; ++j) crow[j] += ail * brow[j];
    }
  }
}

void matmul_nh_scalar(const cplx* a, const cplx* b, cplx* c,
                      std::size_t m, std::size_t k, std::size_t n) {
  // c[i][j] = sum_l a[i][l] * conj(b[j][l]); both factors row-contiguous.
  for (std::size_t i = 0; i < m; ++i) {
    const cplx* arow = a + i * k;
    for (std::size_t j = 0; j < n; ++j) {
      const cplx* brow = b + j * k;
      cplx acc = 0.0;
      for (std::size_t l = 0; l < k; ++l) acc += arow[l] * std::conj(brow[l]);
      c[i * n + j] = acc;
    }
  }
}

void matmul_hn_scalar(const cplx* a, const cplx* b, cplx* c,
                      std::size_t m, std::size_t k, std::size_t n) {
  // c[i][j] = sum_l conj(a[l][i]) * b[l][j]
  for (std::size_t i = 0; i < m; ++i) {
    cplx* crow = c + i * n;
    for (std::size_t j = 0; j < n; ++j) crow[j] = 0.0;
    for (std::size_t l = 0; l < k; ++l) {
      const cplx ali = std::conj(a[l * m + i]);
      const cplx* brow = b + l * n;
      for (std::size_t j = 0; j < n; ++j) crow[j] += ali * brow[j];
    }
  }
}

cplx hs_dot_scalar(const cplx* a, const cplx* b, std::size_t count) {
  cplx acc = 0.0;
  for (std::size_t i = 0; i < count; ++i) acc += std::conj(a[i]) * b[i];
  return acc;
}

void axpy_scalar(cplx alpha, const cplx* x, cplx* y, std::size_t count) {
  for (std::size_t i = 0; i < count; ++i) y[i] += alpha * x[i];
}

void scale_copy_scalar(cplx alpha, const cplx* x, cplx* y, std::size_t count) {
  for (std::size_t i = 0; i < count; ++i) y[i] = alpha * x[i];
}

}  // namespace

const KernelTable& scalar_table() {
  static const KernelTable table{
      matmul_scalar,  matmul_nh_scalar,  matmul_hn_scalar,
      hs_dot_scalar,  axpy_scalar,       scale_copy_scalar,
  };
  return table;
}

}  // namespace entrodis::kernels::detail
