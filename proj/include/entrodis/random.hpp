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

#include <cstdint>
#include <random>
#include <string_view>

#include "entrodis/density.hpp"
#include "entrodis/matrix.hpp"

namespace entrodis {

/// Deterministic random source. All sampling (uniform, Gaussian) is
/// implemented here rather than through std:: distributions, so a seed pins
/// the exact byte stream regardless of standard-library version.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t next_u64() { return eng_(); }

  /// Uniform double in [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

  /// Uniform integer in [0, bound).
  std::uint64_t uniform_index(std::uint64_t bound);

  /// Standard complex Gaussian: real and imaginary parts each N(0, 1).
  cplx complex_gaussian();

 private:
  std::mt19937_64 eng_;
};

/// Mix (seed, label, dim, trial) into a child seed. Used by the sweep
/// harness so each trial's generator is independent of execution order.
std::uint64_t derive_seed(std::uint64_t seed, std::string_view label, std::uint64_t dim,
                          std::uint64_t trial);

/// i.i.d. complex Gaussian entries.
ComplexMatrix gaussian_matrix(std::size_t rows, std::size_t cols, Rng& rng);

/// Haar-distributed unitary: QR of a complex Gaussian matrix, with the
/// positive-diagonal R convention fixed by Gram-Schmidt.
ComplexMatrix haar_unitary(std::size_t d, Rng& rng);

/// Haar-distributed isometry: the first `cols` columns of a Haar unitary.
ComplexMatrix haar_isometry(std::size_t rows, std::size_t cols, Rng& rng);

/// rho = G G^dagger / Tr[G G^dagger] with G a d x rank complex Gaussian.
DensityMatrix random_density(std::size_t d, std::size_t rank, Rng& rng);

/// Random pure state: a Gaussian vector, normalized.
PureState random_pure_state(std::size_t d, Rng& rng);

}  // namespace entrodis
