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

#include <complex>
#include <cstddef>
#include <optional>

namespace entrodis::kernels {

using cplx = std::complex<double>;

// Dense complex kernels behind all matrix arithmetic. Each entry point has a
// scalar reference implementation and, on x86-64 with AVX2+FMA, a vectorized
// variant selected at runtime. SIMD variants must agree with the scalar
// reference up to floating-point reassociation (the equivalence suite pins
// this down); they are never allowed to differ structurally.

enum class Backend { scalar, avx2 };

/// c = a * b with a: m x k, b: k x n, c: m x n (row-major, overwritten).
void matmul(const cplx* a, const cplx* b, cplx* c, std::size_t m, std::size_t k, std::size_t n);

/// c = a * b^dagger with a: m x k, b: n x k, c: m x n.
void matmul_nh(const cplx* a, const cplx* b, cplx* c, std::size_t m, std::size_t k, std::size_t n);

/// c = a^dagger * b with a: k x m, b: k x n, c: m x n.
void matmul_hn(const cplx* a, const cplx* b, cplx* c, std::size_t m, std::size_t k, std::size_t n);

/// sum_i conj(a[i]) * b[i]; over row-major entries this is Tr[A^dagger B].
cplx hs_dot(const cplx* a, const cplx* b, std::size_t count);

/// y += alpha * x
void axpy(cplx alpha, const cplx* x, cplx* y, std::size_t count);

/// y = alpha * x
void scale_copy(cplx alpha, const cplx* x, cplx* y, std::size_t count);

/// Backend currently in use.
Backend active();

/// Override backend selection (tests compare scalar vs. SIMD through this).
/// Passing nullopt restores automatic detection. Forcing avx2 on a machine
/// without it throws. The ENTRODIS_KERNELS=scalar environment variable pins
/// the scalar backend at startup.
void force(std::optional<Backend> backend);

const char* backend_name(Backend b);

namespace detail {
struct KernelTable {
  void (*matmul)(const cplx*, const cplx*, cplx*, std::size_t, std::size_t, std::size_t);
  void (*matmul_nh)(const cplx*, const cplx*, cplx*, std::size_t, std::size_t, std::size_t);
  void (*matmul_hn)(const cplx*, const cplx*, cplx*, std::size_t, std::size_t, std::size_t);
  cplx (*hs_dot)(const cplx*, const cplx*, std::size_t);
  void (*axpy)(cplx, const cplx*, cplx*, std::size_t);
  void (*scale_copy)(cplx, const cplx*, cplx*, std::size_t);
};
const KernelTable& scalar_table();
bool avx2_supported();
#if defined(ENTRODIS_HAVE_AVX2)
const KernelTable& avx2_table();
#endif
}  // namespace detail

}  // namespace entrodis::kernels
