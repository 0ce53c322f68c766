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

// AVX2+FMA variants of the complex kernels. A __m256d holds two complex
// doubles as [re0, im0, re1, im1]. This translation unit is compiled with
// -mavx2 -mfma and only ever entered after a runtime CPU check.

#include "entrodis/kernels.hpp"

#if defined(ENTRODIS_HAVE_AVX2)

#include <immintrin.h>

namespace entrodis::kernels::detail {

namespace {

inline const double* dp(const cplx* p) { return reinterpret_cast<const double*>(p); }
inline double* dp(cplx* p) { return reinterpret_cast<double*>(p); }

// a*b for two complex lanes, with a broadcast as (ar, ai) vectors.
// even lanes: ar*br - ai*bi, odd lanes: ar*bi + ai*br.
inline __m256d cmul(__m256d ar, __m256d ai, __m256d b) {
  const __m256d bswap = _mm256_permute_pd(b, 0x5);
  return _mm256_fmaddsub_pd(ar, b, _mm256_mul_pd(ai, bswap));
}

// (sum of even lanes, sum of odd lanes)
inline void hsum_pairs(__m256d v, double& even, double& odd) {
  const __m128d lo = _mm256_castpd256_pd128(v);
  const __m128d hi = _mm256_extractf128_pd(v, 1);
  const __m128d s = _mm_add_pd(lo, hi);
  even = _mm_cvtsd_f64(s);
  odd = _mm_cvtsd_f64(_mm_unpackhi_pd(s, s));
}

void matmul_avx2(const cplx* a, const cplx* b, cplx* c,
                 std::size_t m, std::size_t k, std::size_t n) {
  const std::size_t n2 = n & ~std::size_t(1);
  for (std::size_t i = 0; i < m; ++i) {
    const cplx* arow = a + i * k;
    cplx* crow = c + i * n;
    for (std::size_t j = 0; j < n2; j += 2) {
      __m256d acc = _mm256_setzero_pd();
      for (std::size_t l = 0; l < k; ++l) {
        const __m256d ar = _mm256_set1_pd(arow[l].real());
        const __m256d ai = _mm256_set1_pd(arow[l].imag());
        const __m256d bv = _mm256_loadu_pd(dp(b + l * n + j));
        acc = _mm256_add_pd(acc, cmul(ar, ai, bv));
      }
      _mm256_storeu_pd(dp(crow + j), acc);
    }
    for (std::size_t j = n2; j < n; ++j) {
      cplx acc = 0.0;
      for (std::size_t l = 0; l < k; ++l) acc += arow[l] * b[l * n + j];
      crow[j] = acc;
    }
  }
}

void matmul_hn_avx2(const cplx* a, const cplx* b, cplx* c,
                    std::size_t m, std::size_t k, std::size_t n) {
  // c[i][j] = sum_l conj(a[l][i]) * b[l][j]; conjugation flips the sign of
  // the broadcast imaginary part.
  const std::size_t n2 = n & ~std::size_t(1);
  for (std::size_t i = 0; i < m; ++i) {
    cplx* crow = c + i * n;
    for (std::size_t j = 0; j < n2; j += 2) {
      __m256d acc = _mm256_setzero_pd();
      for (std::size_t l = 0; l < k; ++l) {
        const cplx ali = a[l * m + i];
        const __m256d ar = _mm256_set1_pd(ali.real());
        const __m256d ai = _mm256_set1_pd(-ali.imag());
        const __m256d bv = _mm256_loadu_pd(dp(b + l * n + j));
        acc = _mm256_add_pd(acc, cmul(ar, ai, bv));
      }
      _mm256_storeu_pd(dp(crow + j), acc);
    }
    for (std::size_t j = n2; j < n; ++j) {
      cplx acc = 0.0;
      for (std::size_t l = 0; l < k; ++l) acc += std::conj(a[l * m + i]) * b[l * n + j];
      crow[j] = acc;
    }
  }
}

// Row-times-conj-row dot: sum_l x[l] * conj(y[l]).
inline cplx dot_xconjy(const cplx* x, const cplx* y, std::size_t count) {
  const std::size_t c2 = count & ~std::size_t(1);
  __m256d prod = _mm256_setzero_pd();   // xr*yr (even) and xi*yi (odd)
  __m256d cross = _mm256_setzero_pd();  // xi*yr (even) and xr*yi (odd)
  for (std::size_t l = 0; l < c2; l += 2) {
    const __m256d xv = _mm256_loadu_pd(dp(x + l));
    const __m256d yv = _mm256_loadu_pd(dp(y + l));
    const __m256d xswap = _mm256_permute_pd(xv, 0x5);
    prod = _mm256_fmadd_pd(xv, yv, prod);
    cross = _mm256_fmadd_pd(xswap, yv, cross);
  }
  double pe, po, ce, co;
  hsum_pairs(prod, pe, po);
  hsum_pairs(cross, ce, co);
  cplx acc{pe + po, ce - co};  // re: xr*yr + xi*yi, im: xi*yr - xr*yi
  for (std::size_t l = c2; l < count; ++l) acc += x[l] * std::conj(y[l]);
  return acc;
}

void matmul_nh_avx2(const cplx* a, const cplx* b, cplx* c,
                    std::size_t m, std::size_t k, std::size_t n) {
  for (std::size_t i = 0; i < m; ++i) {
    const cplx* arow = a + i * k;
    for (std::size_t j = 0; j < n; ++j) {
      c[i * n + j] = dot_xconjy(arow, b + j * k, k);
    }
  }
}

cplx hs_dot_avx2(const cplx* a, const cplx* b, std::size_t count) {
  // sum conj(a)*b = conj(sum a*conj(b))
  return std::conj(dot_xconjy(a, b, count));
}

void axpy_avx2(cplx alpha, const cplx* x, cplx* y, std::size_t count) {
  const std::size_t c2 = count & ~std::size_t(1);
  const __m256d ar = _mm256_set1_pd(alpha.real());
  const __m256d ai = _mm256_set1_pd(alpha.imag());
  for (std::size_t l = 0; l < c2; l += 2) {
    const __m256d xv = _mm256_loadu_pd(dp(x + l));
    const __m256d yv = _mm256_loadu_pd(dp(y + l));
    _mm256_storeu_pd(dp(y + l), _mm256_add_pd(yv, cmul(ar, ai, xv)));
  }
  for (std::size_t l = c2; l < count; ++l) y[l] += alpha * x[l];
}

void scale_copy_avx2(cplx alpha, const cplx* x, cplx* y, std::size_t count) {
  const std::size_t c2 = count & ~std::size_t(1);
  const __m256d ar = _mm256_set1_pd(alpha.real());
  const __m256d ai = _mm256_set1_pd(alpha.imag());
  for (std::size_t l = 0; l < c2; l += 2) {
    const __m256d xv = _mm256_loadu_pd(dp(x + l));
    _mm256_storeu_pd(dp(y + l), cmul(ar, ai, xv));
  }
  for (std::size_t l = c2; l < count; ++l) y[l] = alpha * x[l];
}

}  // namespace

const KernelTable& avx2_table() {
  static const KernelTable table{
      matmul_avx2,  matmul_nh_avx2,  matmul_hn_avx2,
      hs_dot_avx2,  axpy_avx2,       scale_copy_avx2,
  };
  return table;
}

}  // namespace entrodis::kernels::detail

#endif  // ENTRODIS_HAVE_AVX2
