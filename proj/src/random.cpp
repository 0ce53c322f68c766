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

#include "entrodis/random.hpp"

#include <cmath>
#include <numbers>

#include "entrodis/errors.hpp"
#include "entrodis/kernels.hpp"

namespace entrodis {

std::uint64_t Rng::uniform_index(std::uint64_t bound) {
  if (bound == 0) throw DimensionError("uniform_index: bound must be positive");
  // Rejection sampling over the top multiple of bound keeps the draw unbiased.
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
  std::uint64_t x;
  do {
    x = next_u64();
  } while (x >= limit);
  return x % bound;
}

cplx Rng::complex_gaussian() {
  // Box-Muller; one draw consumes exactly two uniforms.
  const double u1 = 1.0 - uniform();  // (0, 1]
  const double u2 = uniform();
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double angle = 2.0 * std::numbers::pi * u2;
  return {r * std::cos(angle), r * std::sin(angle)};
}

std::uint64_t derive_seed(std::uint64_t seed, std::string_view label, std::uint64_t dim,
                          std::uint64_t trial) {
  // FNV-1a over the label, then splitmix64 steps folding in each component.
  std::uint64_t h = 1469598103934665603ULL;
  for (char c : label) {
    h ^= static_cast<unsigned char>(c);
    h *= 1099511628211ULL;
  }
  auto mix = [](std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
  };
  std::uint64_t out = mix(seed);
  out = mix(out ^ h);
  out = mix(out ^ dim);
  out = mix(out ^ trial);
  return out;
}

ComplexMatrix gaussian_matrix(std::size_t rows, std::size_t cols, Rng& rng) {
  ComplexMatrix g(rows, cols);
  for (cplx& e : g.data) e = rng.complex_gaussian();
  return g;
}

namespace {

// Modified Gram-Schmidt with one reorthogonalization pass. Residual norms
// are positive, which fixes the QR phase convention and makes the Q factor
// of a Gaussian matrix Haar-distributed.
ComplexMatrix orthonormalize_columns(ComplexMatrix g) {
  const std::size_t rows = g.rows, cols = g.cols;
  std::vector<cplx> col(rows);
  for (std::size_t j = 0; j < cols; ++j) {
    for (std::size_t i = 0; i < rows; ++i) col[i] = g.at(i, j);
    for (int pass = 0; pass < 2; ++pass) {
      for (std::size_t prev = 0; prev < j; ++prev) {
        cplx overlap = 0.0;
        for (std::size_t i = 0; i < rows; ++i) overlap += std::conj(g.at(i, prev)) * col[i];
        for (std::size_t i = 0; i < rows; ++i) col[i] -= overlap * g.at(i, prev);
      }
    }
    double norm_sq = 0.0;
    for (const cplx& v : col) norm_sq += std::norm(v);
    const double inv = 1.0 / std::sqrt(norm_sq);
    for (std::size_t i = 0; i < rows; ++i) g.at(i, j) = col[i] * inv;
  }
  return g;
}

}  // namespace

ComplexMatrix haar_unitary(std::size_t d, Rng& rng) {
  if (d == 0) throw DimensionError("haar_unitary: d must be positive");
  return orthonormalize_columns(gaussian_matrix(d, d, rng));
}

ComplexMatrix haar_isometry(std::size_t rows, std::size_t cols, Rng& rng) {
  if (cols == 0 || cols > rows) throw DimensionError("haar_isometry: need 1 <= cols <= rows");
  return orthonormalize_columns(gaussian_matrix(rows, cols, rng));
}

DensityMatrix random_density(std::size_t d, std::size_t rank, Rng& rng) {
  if (rank == 0 || rank > d) throw DimensionError("random_density: need 1 <= rank <= d");
  const ComplexMatrix g = gaussian_matrix(d, rank, rng);
  ComplexMatrix m = multiply_nh(g, g);
  const double tr = trace(m).real();
  m = scaled(m, 1.0 / tr);
  // Exact hermitization; G G^dagger is Hermitian up to rounding.
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = i + 1; j < d; ++j) {
      const cplx v = 0.5 * (m.at(i, j) + std::conj(m.at(j, i)));
      m.at(i, j) = v;
      m.at(j, i) = std::conj(v);
    }
    m.at(i, i) = m.at(i, i).real();
  }
  return DensityMatrix::from_matrix(std::move(m));
}

PureState random_pure_state(std::size_t d, Rng& rng) {
  std::vector<cplx> amps(d);
  double norm_sq = 0.0;
  for (cplx& a : amps) {
    a = rng.complex_gaussian();
    norm_sq += std::norm(a);
  }
  const double inv = 1.0 / std::sqrt(norm_sq);
  for (cplx& a : amps) a *= inv;
  PureState psi;
  psi.dim = d;
  psi.amplitudes = std::move(amps);
  return psi;
}

}  // namespace entrodis
