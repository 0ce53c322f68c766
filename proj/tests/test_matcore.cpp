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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstring>

#include "entrodis/density.hpp"
#include "entrodis/errors.hpp"
#include "entrodis/linalg.hpp"
#include "entrodis/random.hpp"

using namespace entrodis;

namespace {

ComplexMatrix random_hermitian(std::size_t d, Rng& rng) {
  const ComplexMatrix g = gaussian_matrix(d, d, rng);
  ComplexMatrix h(d, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) h.at(i, j) = 0.5 * (g.at(i, j) + std::conj(g.at(j, i)));
  return h;
}

ComplexMatrix diag(std::initializer_list<double> values) {
  ComplexMatrix m(values.size(), values.size());
  std::size_t i = 0;
  for (double v : values) m.at(i, i) = v, ++i;
  return m;
}

}  // namespace

TEST_CASE("tensor: identity and basis bookkeeping") {
  const ComplexMatrix i2 = ComplexMatrix::identity(2);
  CHECK(max_abs_diff(tensor(i2, i2), ComplexMatrix::identity(4)) == 0.0);
  CHECK(max_abs_diff(tensor(diag({1, 0}), diag({0, 1})), diag({0, 1, 0, 0})) == 0.0);
}

TEST_CASE("tensor: trace is multiplicative on random pairs") {
  Rng rng(101);
  for (int t = 0; t < 10; ++t) {
    const ComplexMatrix a = gaussian_matrix(3, 3, rng);
    const ComplexMatrix b = gaussian_matrix(2, 2, rng);
    // oracle: direct trace computation on both factors
    CHECK(std::abs(trace(tensor(a, b)) - trace(a) * trace(b)) < 1e-12);
  }
}

TEST_CASE("partial_trace: maximally entangled and product cases") {
  std::vector<cplx> phi(4, 0.0);
  phi[0] = 1.0 / std::sqrt(2.0);
  phi[3] = 1.0 / std::sqrt(2.0);
  const ComplexMatrix proj = outer(phi, phi);
  CHECK(max_abs_diff(partial_trace(proj, {2, 2}, {0}),
                     scaled(ComplexMatrix::identity(2), 0.5)) < 1e-15);

  Rng rng(102);
  const DensityMatrix ra = random_density(2, 2, rng);
  const DensityMatrix rb = random_density(3, 2, rng);
  const ComplexMatrix joint = tensor(ra.matrix(), rb.matrix());
  CHECK(max_abs_diff(partial_trace(joint, {2, 3}, {0}), ra.matrix()) < 1e-10);
  CHECK(max_abs_diff(partial_trace(joint, {2, 3}, {1}), rb.matrix()) < 1e-10);
}

TEST_CASE("partial_trace: preserves the trace of random Hermitian inputs") {
  Rng rng(103);
  for (int t = 0; t < 10; ++t) {
    const ComplexMatrix h = random_hermitian(12, rng);
    // oracle: direct summation of the diagonal
    cplx direct = 0.0;
    for (std::size_t i = 0; i < 12; ++i) direct += h.at(i, i);
    for (const auto& keep : std::vector<std::vector<std::size_t>>{{0}, {1}, {0, 1}}) {
      const ComplexMatrix red = partial_trace(h, {3, 4}, keep);
      CHECK(std::abs(trace(red) - direct) < 1e-12);
    }
  }
}

TEST_CASE("partial_trace: three subsystems reduce to nested two-subsystem calls") {
  Rng rng(112);
  const ComplexMatrix h = random_hermitian(2 * 3 * 2, rng);
  // trace out the middle factor in one shot ...
  const ComplexMatrix direct = partial_trace(h, {2, 3, 2}, {0, 2});
  // ... or via the flattened bipartitions
  const ComplexMatrix first = partial_trace(h, {2, 6}, {1});        // drop subsystem 0
  const ComplexMatrix outer_kept = partial_trace(h, {6, 2}, {0});   // drop subsystem 2
  CHECK(std::abs(trace(direct) - trace(h)) < 1e-12);
  CHECK(direct.rows == 4);
  // cross-check one full contraction against an explicit index sum
  cplx expected = 0.0;
  for (std::size_t m = 0; m < 3; ++m) expected += h.at(0 * 6 + m * 2 + 1, 1 * 6 + m * 2 + 0);
  CHECK(std::abs(direct.at(0 * 2 + 1, 1 * 2 + 0) - expected) < 1e-12);
  CHECK(first.rows == 6);
  CHECK(outer_kept.rows == 6);
}

TEST_CASE("partial_trace: dimension mismatch is an error") {
  CHECK_THROWS_AS(partial_trace(ComplexMatrix::identity(6), {2, 2}, {0}), DimensionError);
  CHECK_THROWS_AS(partial_trace(ComplexMatrix::identity(4), {2, 2}, {1, 0}), DimensionError);
}

TEST_CASE("eigh: diagonal input, Pauli spectrum, non-Hermitian rejection") {
  const EighResult r = eigh(diag({1, 3, 2}));
  CHECK(r.values[0] == doctest::Approx(3).epsilon(1e-14));
  CHECK(r.values[1] == doctest::Approx(2).epsilon(1e-14));
  CHECK(r.values[2] == doctest::Approx(1).epsilon(1e-14));

  ComplexMatrix sx(2, 2);
  sx.at(0, 1) = 1.0;
  sx.at(1, 0) = 1.0;
  const EighResult rx = eigh(sx);
  CHECK(rx.values[0] == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(rx.values[1] == doctest::Approx(-1.0).epsilon(1e-14));

  ComplexMatrix bad(2, 2);
  bad.at(0, 1) = 1.0;
  CHECK_THROWS_AS(eigh(bad), ValidationError);
}

TEST_CASE("eigh: reconstruction residual below 1e-10 on random Hermitian matrices") {
  Rng rng(104);
  for (std::size_t d : {2, 3, 4, 8, 16}) {
    const ComplexMatrix h = random_hermitian(d, rng);
    const EighResult r = eigh(h);
    // V^dagger H V == diag(values)
    const ComplexMatrix vhv = multiply_hn(r.vectors, multiply(h, r.vectors));
    double err = 0.0;
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) {
        const cplx expected = (i == j) ? cplx{r.values[i], 0.0} : cplx{0.0, 0.0};
        err = std::max(err, std::abs(vhv.at(i, j) - expected));
      }
    CHECK(err < 1e-10);
    CHECK(max_abs_diff(multiply_hn(r.vectors, r.vectors), ComplexMatrix::identity(d)) < 1e-9);
  }
}

TEST_CASE("eigh: identical input bytes give identical output bytes") {
  Rng rng(105);
  const ComplexMatrix h = random_hermitian(5, rng);
  const EighResult a = eigh(h);
  const EighResult b = eigh(h);
  CHECK(std::memcmp(a.values.data(), b.values.data(), a.values.size() * sizeof(double)) == 0);
  CHECK(std::memcmp(a.vectors.data.data(), b.vectors.data.data(),
                    a.vectors.data.size() * sizeof(cplx)) == 0);
}

TEST_CASE("DensityMatrix: validation and eigenvalue clipping") {
  ComplexMatrix not_herm(2, 2);
  not_herm.at(0, 0) = 0.5;
  not_herm.at(1, 1) = 0.5;
  not_herm.at(0, 1) = 0.1;
  CHECK_THROWS_AS(DensityMatrix::from_matrix(not_herm), ValidationError);

  CHECK_THROWS_AS(DensityMatrix::from_matrix(diag({0.6, 0.6})), ValidationError);

  // [-psd, 0) clips to zero ...
  const DensityMatrix ok = DensityMatrix::from_matrix(diag({1.0 + 1e-10, -1e-10}));
  CHECK(ok.spectrum()[1] == 0.0);
  // ... below -psd is invalid
  CHECK_THROWS_AS(DensityMatrix::from_matrix(diag({1.0 + 5e-9, -5e-9})), ValidationError);
}

TEST_CASE("DensityMatrix: spectral resynthesis within 1e-8") {
  Rng rng(106);
  for (int t = 0; t < 20; ++t) {
    const std::size_t d = 2 + t % 3;
    const DensityMatrix rho = random_density(d, 1 + t % d, rng);
    ComplexMatrix resynth(d, d);
    for (std::size_t j = 0; j < d; ++j) {
      const std::vector<cplx> col = column(rho.eigenbasis(), j);
      accumulate(resynth, outer(col, col), rho.spectrum()[j]);
    }
    CHECK(max_abs_diff(resynth, rho.matrix()) < 1e-8);
    double sum = 0.0;
    for (double v : rho.spectrum()) sum += v;
    CHECK(std::abs(sum - 1.0) < 1e-9);
    CHECK(std::is_sorted(rho.spectrum().rbegin(), rho.spectrum().rend()));
  }
}

TEST_CASE("purify: pure input gives a product state, flat input maximal entanglement") {
  const DensityMatrix ground = DensityMatrix::pure(PureState::basis_state(2, 0));
  const PureState psi = purify(ground);
  CHECK(std::abs(psi.amplitudes[0] - 1.0) < 1e-12);  // |0>|0>

  const PureState bell = purify(DensityMatrix::maximally_mixed(2));
  const ComplexMatrix red = partial_trace(projector(bell), {2, 2}, {1});
  CHECK(max_abs_diff(red, scaled(ComplexMatrix::identity(2), 0.5)) < 1e-12);
  for (std::size_t i = 0; i < 4; ++i)
    CHECK(std::abs(std::abs(bell.amplitudes[i]) - ((i == 0 || i == 3) ? 1.0 / std::sqrt(2.0) : 0.0)) <
          1e-12);
}

TEST_CASE("purify: partial-trace round trip below 1e-9 on random states") {
  Rng rng(107);
  for (int t = 0; t < 20; ++t) {
    const std::size_t d = 2 + t % 3;
    const DensityMatrix rho = random_density(d, 1 + t % d, rng);
    const PureState psi = purify(rho);
    // oracle: independent partial trace of the projector
    const ComplexMatrix back = partial_trace(projector(psi), {d, d}, {0});
    CHECK(max_abs_diff(back, rho.matrix()) < 1e-9);

    const PureState psi_min = purify_minimal(rho);
    const std::size_t dref = psi_min.dim / d;
    CHECK(dref == rho.rank());
    const ComplexMatrix back_min = partial_trace(projector(psi_min), {d, dref}, {0});
    CHECK(max_abs_diff(back_min, rho.matrix()) < 1e-9);
  }
}

TEST_CASE("trace_distance: orthogonal pure states, identity, triangle inequality") {
  const DensityMatrix zero = DensityMatrix::pure(PureState::basis_state(2, 0));
  const DensityMatrix one = DensityMatrix::pure(PureState::basis_state(2, 1));
  CHECK(trace_distance(zero, one) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(trace_distance(zero, zero) == 0.0);

  Rng rng(108);
  for (int t = 0; t < 50; ++t) {
    const std::size_t d = 2 + t % 3;
    const DensityMatrix a = random_density(d, 1 + rng.uniform_index(d), rng);
    const DensityMatrix b = random_density(d, 1 + rng.uniform_index(d), rng);
    const DensityMatrix c = random_density(d, 1 + rng.uniform_index(d), rng);
    CHECK(trace_distance(a, c) <= trace_distance(a, b) + trace_distance(b, c) + 1e-12);
    CHECK(trace_distance(a, b) == doctest::Approx(trace_distance(b, a)).epsilon(1e-12));
  }
}

TEST_CASE("fidelity: identity, orthogonality, overlap oracle for pure states") {
  Rng rng(109);
  const DensityMatrix rho = random_density(3, 3, rng);
  CHECK(fidelity(rho, rho) == doctest::Approx(1.0).epsilon(1e-10));
  const DensityMatrix zero = DensityMatrix::pure(PureState::basis_state(2, 0));
  const DensityMatrix one = DensityMatrix::pure(PureState::basis_state(2, 1));
  CHECK(fidelity(zero, one) < 1e-12);

  for (int t = 0; t < 20; ++t) {
    const std::size_t d = 2 + t % 3;
    const PureState a = random_pure_state(d, rng);
    const PureState b = random_pure_state(d, rng);
    cplx overlap = 0.0;
    for (std::size_t i = 0; i < d; ++i) overlap += std::conj(a.amplitudes[i]) * b.amplitudes[i];
    const double f = fidelity(DensityMatrix::pure(a), DensityMatrix::pure(b));
    CHECK(std::abs(f - std::norm(overlap)) < 1e-10);
  }

  for (int t = 0; t < 10; ++t) {
    const DensityMatrix a = random_density(3, 1 + t % 3, rng);
    const DensityMatrix b = random_density(3, 1 + (t + 1) % 3, rng);
    CHECK(fidelity(a, b) == doctest::Approx(fidelity(b, a)).epsilon(1e-9));
  }
}

TEST_CASE("trace distance vs fidelity: Fuchs-van de Graaf sandwich") {
  Rng rng(110);
  for (int t = 0; t < 100; ++t) {
    const std::size_t d = 2 + t % 3;
    const DensityMatrix a = random_density(d, 1 + rng.uniform_index(d), rng);
    const DensityMatrix b = random_density(d, 1 + rng.uniform_index(d), rng);
    const double tdist = trace_distance(a, b);
    const double f = fidelity(a, b);
    CHECK(1.0 - f <= tdist + 1e-9);
    CHECK(tdist <= std::sqrt(1.0 - f) + 1e-9);
  }
}

TEST_CASE("haar_unitary: d=1, unitarity, determinism") {
  Rng r1(7);
  const ComplexMatrix u1 = haar_unitary(1, r1);
  CHECK(std::abs(std::abs(u1.at(0, 0)) - 1.0) < 1e-12);

  Rng r2(7);
  for (std::size_t d = 2; d <= 8; ++d) {
    Rng ra(1000 + d), rb(1000 + d);
    const ComplexMatrix ua = haar_unitary(d, ra);
    const ComplexMatrix ub = haar_unitary(d, rb);
    CHECK(max_abs_diff(multiply_hn(ua, ua), ComplexMatrix::identity(d)) < 1e-10);
    CHECK(std::memcmp(ua.data.data(), ub.data.data(), ua.size() * sizeof(cplx)) == 0);
  }
}

TEST_CASE("random_density: rank control and invariants") {
  Rng rng(111);
  const DensityMatrix pure_like = random_density(4, 1, rng);
  double entropy = 0.0;
  for (double v : pure_like.spectrum())
    if (v > 1e-15) entropy -= v * std::log2(v);
  CHECK(entropy < 1e-9);

  const DensityMatrix full = random_density(4, 4, rng);
  for (double v : full.spectrum()) CHECK(v > 0.0);

  for (int t = 0; t < 100; ++t) {
    const std::size_t d = 2 + t % 3;
    const std::size_t rank = 1 + t % d;
    const DensityMatrix rho = random_density(d, rank, rng);
    CHECK(rho.rank() == rank);
    CHECK(is_hermitian(rho.matrix(), 1e-9));
    CHECK(std::abs(trace(rho.matrix()).real() - 1.0) < 1e-9);
  }
  CHECK_THROWS_AS(random_density(3, 0, rng), DimensionError);
  CHECK_THROWS_AS(random_density(3, 4, rng), DimensionError);
}
