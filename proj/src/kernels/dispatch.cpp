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

#include "entrodis/kernels.hpp"

#include <cstdlib>
#include <cstring>
#include <stdexcept>

namespace entrodis::kernels {

namespace detail {

bool avx2_supported() {
#if defined(ENTRODIS_HAVE_AVX2) && (defined(__x86_64__) || defined(_M_X64))
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
  return false;
#endif
}

}  // namespace detail

namespace {

Backend detect() {
  if (const char* env = std::getenv("ENTRODIS_KERNELS")) {
    if (std::strcmp(env, "scalar") == 0) return Backend::scalar;
  }
  return detail::avx2_supported() ? Backend::avx2 : Backend::scalar;
}

Backend& current() {
  static Backend backend = detect();
  return backend;
}

const detail::KernelTable& table() {
#if defined(ENTRODIS_HAVE_AVX2)
  if (current() == Backend::avx2) return detail::avx2_table();
#endif
  return detail::scalar_table();
}

}  // namespace

Backend active() { return current(); }

void force(std::optional<Backend> backend) {
  if (!backend) {
    current() = detect();
    return;
  }
  if (*backend == Backend::avx2 && !detail::avx2_supported())
    throw std::runtime_error("kernels: avx2 backend not supported on this CPU/build");
  current() = *backend;
}

const char* backend_name(Backend b) {
  switch (b) {
    case Backend::scalar: return "scalar";
    case Backend::avx2: return "avx2";
  }
  return "unknown";
}

void matmul(const cplx* a, const cplx* b, cplx* c, std::size_t m, std::size_t k, std::size_t n) {
  table().matmul(a, b, c, m, k, n);
}
void matmul_nh(const cplx* a, const cplx* b, cplx* c, std::size_t m, std::size_t k, std::size_t n) {
  table().matmul_nh(a, b, c, m, k, n);
}
void matmul_hn(const cplx* a, const cplx* b, cplx* c, std::size_t m, std::size_t k, std::size_t n) {
  table().matmul_hn(a, b, c, m, k, n);
}
cplx hs_dot(const cplx* a, const cplx* b, std::size_t count) { return table().hs_dot(a, b, count); }
void axpy(cplx alpha, const cplx* x, cplx* y, std::size_t count) { table().axpy(alpha, x, y, count); }
void scale_copy(cplx alpha, const cplx* x, cplx* y, std::size_t count) {
  table().scale_copy(alpha, x, y, count);
}

}  // namespace entrodis::kernels
