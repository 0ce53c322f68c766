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

#include "entrodis/choi.hpp"
#include "entrodis/errors.hpp"
#include "entrodis/functionals.hpp"
#include "entrodis/harness.hpp"
#include "entrodis/linalg.hpp"
#include "entrodis/random.hpp"
#include "entrodis/stinespring.hpp"

using namespace entrodis;

// Binary entropy of 1/4, frozen from the closed form 2 - (3/4) log2(3).
static constexpr double kH14 = 0.811278124459133;

namespace {

ComplexMatrix sigma_x() {
  ComplexMatrix m(2, 2);
  m.at(0, 1) = 1.0;
  m.at(1, 0) = 1.0;
  return m;
}

ComplexMatrix x_basis() {
  ComplexMatrix m(2, 2);
  const double s = 1.0 / std::sqrt(2.0);
  m.at(0, 0) = s;
  m.at(1, 0) = s;
  m.at(0, 1) = s;
  m.at(1, 1) = -s;
  return m;
}

Instrument rotated_eigenbasis_instrument(const DensityMatrix& rho, const ComplexMatrix& u) {
  std::vector<ComplexMatrix> kraus;
  std::vector<Outcome> outcomes;
  for (std::size_t j = 0; j < rho.dim(); ++j) {
    const std::vector<cplx> vj = column(rho.eigenbasis(), j);
    kraus.push_back(multiply(u, outer(vj, vj)));
    outcomes.push_back({"k" + std::to_string(j), {j}});
  }
  return Instrument::from_parts(Channel::from_kraus(std::move(kraus)), std::move(outcomes));
}

}  // namespace

TEST_CASE("shannon_entropy: endpoints, bits, diagonal embedding, validation") {
  CHECK(shannon_entropy(std::vector<double>{1.0, 0.0}) == 0.0);
  CHECK(shannon_entropy(std::vector<double>{0.5, 0.5}) == doctest::Approx(1.0).epsilon(1e-14));
  // independent evaluation of the frozen constant
  const double direct = -(0.75 * std::log2(0.75) + 0.25 * std::log2(0.25));
  CHECK(direct == doctest::Approx(kH14).epsilon(1e-14));
  CHECK(shannon_entropy(std::vector<double>{0.75, 0.25}) ==
        doctest::Approx(kH14).epsilon(1e-12));
  CHECK(shannon_entropy(std::vector<double>{0.75, 0.25}) ==
        doctest::Approx(von_neumann_entropy(DensityMatrix::diagonal({0.75, 0.25})))
            .epsilon(1e-12));
  CHECK_THROWS_AS(shannon_entropy(std::vector<double>{0.7, 0.7}), ValidationError);
  CHECK_THROWS_AS(shannon_entropy(std::vector<double>{1.5, -0.5}), ValidationError);
}

TEST_CASE("von_neumann_entropy: pure, flat, binary") {
  CHECK(von_neumann_entropy(DensityMatrix::pure(PureState::basis_state(3, 1))) < 1e-9);
  for (std::size_t d : {2, 3, 4, 8})
    CHECK(von_neumann_entropy(DensityMatrix::maximally_mixed(d)) ==
          doctest::Approx(std::log2(double(d))).epsilon(1e-12));
  CHECK(von_neumann_entropy(DensityMatrix::diagonal({0.75, 0.25})) ==
        doctest::Approx(kH14).epsilon(1e-9));
}

TEST_CASE("w_matrix and exchange entropy: hand-computed instances") {
  Rng rng(301);
  // single Kraus: W is the 1x1 unit matrix, S_e = 0
  const Channel uni = Channel::unitary(haar_unitary(3, rng));
  const DensityMatrix rho3 = random_density(3, 3, rng);
  CHECK(w_matrix(uni, rho3).matrix.at(0, 0).real() == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(exchange_entropy(uni, rho3) < 1e-9);

  // eigenbasis projectors: W = diag(lambda), S_e = S(rho)
  const Instrument proj = Instrument::projective_eigenbasis(rho3);
  const WMatrix w = w_matrix(proj.channel(), rho3);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) {
      const double expected = (i == j) ? rho3.spectrum()[i] : 0.0;
      CHECK(std::abs(w.matrix.at(i, j) - expected) < 1e-10);
    }
  CHECK(exchange_entropy(proj.channel(), rho3) ==
        doctest::Approx(von_neumann_entropy(rho3)).epsilon(1e-9));

  // depolarizing at the maximally mixed state: W = I/4, S_e = 2 bits
  const Channel dep = Channel::depolarizing_qubit();
  const DensityMatrix mixed = DensityMatrix::maximally_mixed(2);
  const WMatrix wd = w_matrix(dep, mixed);
  CHECK(max_abs_diff(wd.matrix, scaled(ComplexMatrix::identity(4), 0.25)) < 1e-12);
  CHECK(exchange_entropy(dep, mixed) == doctest::Approx(2.0).epsilon(1e-12));
}

TEST_CASE("w_matrix is Hermitian, PSD and unit trace on random instances") {
  Rng rng(317);
  for (int t = 0; t < 20; ++t) {
    const std::size_t d = 2 + t % 3;
    const Channel c = harness::sample_instrument(d, d * d, rng).channel();
    const DensityMatrix rho = harness::sample_density(d, rng);
    const WMatrix w = w_matrix(c, rho);
    CHECK(is_hermitian(w.matrix, 1e-9));
    CHECK(std::abs(trace(w.matrix).real() - 1.0) < 1e-9);
    CHECK(eigh(w.matrix).values.back() > -1e-9);
  }
}

TEST_CASE("exchange entropy: W route vs purification route vs dilation route") {
  Rng rng(302);
  for (int t = 0; t < 30; ++t) {
    const std::size_t d = 2 + t % 3;
    const Instrument ins = harness::sample_instrument(d, d * d, rng);
    const DensityMatrix rho = harness::sample_density(d, rng);
    const double via_w = exchange_entropy(ins.channel(), rho);
    const double via_purification = exchange_entropy_via_purification(ins.channel(), rho);
    const double via_minimal = exchange_entropy_via_purification(ins.channel(), rho, true);
    CHECK(std::abs(via_w - via_purification) < 1e-9);
    CHECK(std::abs(via_w - via_minimal) < 1e-9);  // purification-independence

    // third route: entropy of the probe after the isometric dilation
    const StinespringModel model = stinespring(ins);
    const ComplexMatrix probe = partial_trace(model.dilate(rho), {model.dout, model.denv}, {1});
    CHECK(std::abs(via_w - shannon_entropy(eigh(probe).values)) < 1e-9);
  }
}

TEST_CASE("exchange entropy: frame-operator path agrees with the literal W matrix") {
  Rng rng(303);
  const Channel a = harness::sample_instrument(2, 4, rng).channel();
  const Channel b = harness::sample_instrument(2, 4, rng).channel();
  const Channel big = compose(b, a);  // up to 16 Kraus operators > din*dout = 4
  REQUIRE(big.kraus().size() > 4);
  const DensityMatrix rho = harness::sample_density(2, rng);
  const double via_frame = exchange_entropy(big, rho);
  const double via_w = shannon_entropy(eigh(w_matrix(big, rho).matrix).values);
  CHECK(std::abs(via_frame - via_w) < 1e-9);
}

TEST_CASE("coherent information and disturbance: closed-form instances") {
  Rng rng(304);
  const DensityMatrix rho = random_density(3, 3, rng);
  CHECK(coherent_information(Channel::identity(3), rho) ==
        doctest::Approx(von_neumann_entropy(rho)).epsilon(1e-9));
  CHECK(std::abs(disturbance(Channel::identity(3), rho)) < 1e-9);

  for (int t = 0; t < 10; ++t) {
    const std::size_t d = 2 + t % 3;
    const Channel uni = Channel::unitary(haar_unitary(d, rng));
    const DensityMatrix r = harness::sample_density(d, rng);
    CHECK(std::abs(disturbance(uni, r)) < 1e-9);
  }

  const DensityMatrix mixed = DensityMatrix::maximally_mixed(2);
  CHECK(coherent_information(Channel::depolarizing_qubit(), mixed) ==
        doctest::Approx(-1.0).epsilon(1e-12));
  CHECK(disturbance(Channel::depolarizing_qubit(), mixed) ==
        doctest::Approx(2.0).epsilon(1e-12));

  const DensityMatrix diag34 = DensityMatrix::diagonal({0.75, 0.25});
  const Instrument proj = Instrument::projective_eigenbasis(diag34);
  CHECK(coherent_information(proj.channel(), diag34) == doctest::Approx(0.0).epsilon(1e-9));
  CHECK(disturbance(proj.channel(), diag34) == doctest::Approx(kH14).epsilon(1e-6));
}

TEST_CASE("mutual information: pure state, eigenbasis readout, unbiased basis") {
  const DensityMatrix pure = DensityMatrix::pure(PureState::basis_state(2, 0));
  const Instrument z = Instrument::projective(ComplexMatrix::identity(2));
  CHECK(mutual_information(z, pure) < 1e-12);

  const DensityMatrix diag34 = DensityMatrix::diagonal({0.75, 0.25});
  CHECK(mutual_information(z, diag34) == doctest::Approx(kH14).epsilon(1e-9));

  const Instrument x = Instrument::projective(x_basis());
  CHECK(mutual_information(x, diag34) < 1e-12);
}

TEST_CASE("mutual information: bounded by both marginal entropies") {
  Rng rng(305);
  for (int t = 0; t < 30; ++t) {
    const std::size_t d = 2 + t % 3;
    const Instrument ins = harness::sample_instrument(d, d * d, rng);
    const DensityMatrix rho = harness::sample_density(d, rng);
    const double info = mutual_information(ins, rho);
    const double h_spec = shannon_entropy(rho.spectrum());
    const double h_out = shannon_entropy(outcome_probabilities(ins, rho));
    CHECK(info >= 0.0);
    CHECK(info <= std::min(h_spec, h_out) + 1e-9);
  }
}

TEST_CASE("holevo chi: unitary, projective, and the I <= chi <= D chain") {
  Rng rng(306);
  const DensityMatrix rho = random_density(3, 3, rng);
  CHECK(std::abs(holevo_chi(Instrument::trivial(Channel::unitary(haar_unitary(3, rng))), rho)) <
        1e-9);
  CHECK(holevo_chi(Instrument::projective_eigenbasis(rho), rho) ==
        doctest::Approx(von_neumann_entropy(rho)).epsilon(1e-9));

  for (int t = 0; t < 30; ++t) {
    const std::size_t d = 2 + t % 3;
    const Instrument ins = harness::sample_instrument(d, d * d, rng);
    const DensityMatrix r = harness::sample_density(d, rng);
    const double info = mutual_information(ins, r);
    const double chi = holevo_chi(ins, r);
    const double dist = disturbance(ins.channel(), r);
    CHECK(info <= chi + 1e-8);
    CHECK(chi <= dist + 1e-8);
  }
}

TEST_CASE("fidelity comparators: identity and the orthogonal-rotation critique") {
  Rng rng(307);
  const DensityMatrix rho = random_density(2, 2, rng);
  const FidelityComparators none = fidelity_disturbances(Channel::identity(2), rho);
  CHECK(none.fidelity_disturbance < 1e-9);
  CHECK(none.entanglement_fidelity_disturbance < 1e-9);
  CHECK(none.dbar < 1e-9);

  // A reversible map with maximal fidelity-based disturbance.
  const DensityMatrix zero = DensityMatrix::pure(PureState::basis_state(2, 0));
  const Channel flip = Channel::unitary(sigma_x());
  const FidelityComparators fc = fidelity_disturbances(flip, zero);
  CHECK(fc.fidelity_disturbance == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(std::abs(disturbance(flip, zero)) < 1e-9);
  CHECK(fc.dbar < 1e-9);

  for (int t = 0; t < 20; ++t) {
    const std::size_t d = 2 + t % 3;
    const Channel uni = Channel::unitary(haar_unitary(d, rng));
    const DensityMatrix r = harness::sample_density(d, rng);
    CHECK(fidelity_disturbances(uni, r).dbar < 1e-9);  // spectra preserved
  }
}

TEST_CASE("dbar closed form matches direct optimization over unitaries") {
  Rng rng(308);
  for (int t = 0; t < 5; ++t) {
    const DensityMatrix rho = random_density(2, 2, rng);
    const Channel noisy = harness::sample_noisy_instrument(2, 4, rng).channel();
    const DensityMatrix out = apply(noisy, rho);
    const double closed_form = 1.0 - fidelity_disturbances(noisy, rho).dbar;

    // The aligning unitary (sorted eigenbasis onto sorted eigenbasis) must
    // reach the closed-form maximum ...
    const ComplexMatrix align = multiply_nh(rho.eigenbasis(), out.eigenbasis());
    const DensityMatrix rotated = DensityMatrix::from_matrix(
        multiply_nh(multiply(align, out.matrix()), align));
    CHECK(fidelity(rho, rotated) == doctest::Approx(closed_form).epsilon(1e-9));

    // ... and no sampled unitary may exceed it.
    for (int s = 0; s < 200; ++s) {
      const ComplexMatrix u = haar_unitary(2, rng);
      const DensityMatrix candidate =
          DensityMatrix::from_matrix(multiply_nh(multiply(u, out.matrix()), u));
      CHECK(fidelity(rho, candidate) <= closed_form + 1e-9);
    }
  }
}

TEST_CASE("entanglement fidelity: purification route oracle") {
  Rng rng(309);
  for (int t = 0; t < 10; ++t) {
    const std::size_t d = 2 + t % 3;
    const Channel c = harness::sample_instrument(d, d * d, rng).channel();
    const DensityMatrix rho = harness::sample_density(d, rng);
    const double fe = entanglement_fidelity(c, rho);

    // oracle: literal <Psi|(Q (x) 1)[|Psi><Psi|]|Psi>
    const PureState psi = purify(rho);
    ComplexMatrix m(d, d);
    m.data = psi.amplitudes;
    double literal = 0.0;
    for (const ComplexMatrix& k : c.kraus()) {
      const ComplexMatrix km = multiply(k, m);
      cplx amp = 0.0;
      for (std::size_t i = 0; i < km.size(); ++i) amp += std::conj(psi.amplitudes[i]) * km.data[i];
      literal += std::norm(amp);
    }
    CHECK(fe == doctest::Approx(literal).epsilon(1e-10));
  }
}

TEST_CASE("state-independent quantities: unitary, projective, noisy") {
  Rng rng(310);
  const StateIndependent uni =
      state_independent(Instrument::trivial(Channel::unitary(haar_unitary(3, rng))));
  CHECK(std::abs(uni.info) < 1e-9);
  CHECK(std::abs(uni.dist) < 1e-9);

  const StateIndependent proj =
      state_independent(Instrument::projective(ComplexMatrix::identity(2)));
  CHECK(proj.info == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(proj.dist == doctest::Approx(1.0).epsilon(1e-9));

  for (int t = 0; t < 20; ++t) {
    const std::size_t d = 2 + t % 3;
    const StateIndependent si =
        state_independent(harness::sample_noisy_instrument(d, d * d, rng));
    CHECK(si.dist > 1e-6);
    CHECK(si.info <= si.dist + 1e-8);
  }
}

TEST_CASE("disturbance and exchange entropy are Kraus-representation independent") {
  Rng rng(311);
  for (int t = 0; t < 20; ++t) {
    const std::size_t d = 2 + t % 3;
    const Channel c = harness::sample_instrument(d, d * d, rng).channel();
    const DensityMatrix rho = harness::sample_density(d, rng);
    const Channel remixed = remix_kraus(c, haar_unitary(c.kraus().size(), rng));
    CHECK(std::abs(exchange_entropy(c, rho) - exchange_entropy(remixed, rho)) < 1e-9);
    CHECK(std::abs(disturbance(c, rho) - disturbance(remixed, rho)) < 1e-9);
  }
}

TEST_CASE("disturbance: data-processing monotonicity and nonnegativity") {
  Rng rng(312);
  for (int t = 0; t < 30; ++t) {
    const std::size_t d = 2 + t % 3;
    const Channel q = harness::sample_instrument(d, d, rng).channel();
    const Channel q2 = harness::sample_instrument(d, d, rng).channel();
    const DensityMatrix rho = harness::sample_density(d, rng);
    const double d1 = disturbance(q, rho);
    CHECK(d1 >= -1e-9);
    CHECK(disturbance(compose(q2, q), rho) >= d1 - 1e-8);
  }
}

TEST_CASE("equality holds when the probe records orthogonal eigenvector images") {
  Rng rng(313);
  // pure input: nothing to learn and nothing irreversible happens
  const DensityMatrix pure = DensityMatrix::pure(random_pure_state(3, rng));
  const Instrument pure_proj = Instrument::projective_eigenbasis(pure);
  CHECK(mutual_information(pure_proj, pure) < 1e-9);
  CHECK(std::abs(disturbance(pure_proj.channel(), pure)) < 1e-9);

  for (int t = 0; t < 20; ++t) {
    const std::size_t d = 2 + t % 3;
    const DensityMatrix rho = harness::sample_density(d, rng);
    const Instrument plain = Instrument::projective_eigenbasis(rho);
    CHECK(std::abs(mutual_information(plain, rho) - disturbance(plain.channel(), rho)) < 1e-8);

    const Instrument rotated = rotated_eigenbasis_instrument(rho, haar_unitary(d, rng));
    CHECK(std::abs(mutual_information(rotated, rho) - disturbance(rotated.channel(), rho)) <
          1e-8);
  }
}

TEST_CASE("degenerate states: tradeoff holds in any eigenbasis convention") {
  Rng rng(314);
  for (std::size_t d : {2, 3, 4}) {
    const Instrument ins = harness::sample_instrument(d, d * d, rng);
    const StateIndependent si = state_independent(ins);
    const std::vector<double> flat(d, 1.0 / double(d));
    for (int s = 0; s < 10; ++s) {
      const double info_rot = mutual_information_in_basis(ins, flat, haar_unitary(d, rng));
      CHECK(info_rot <= si.dist + 1e-8);
    }
  }
}

TEST_CASE("fannes-audenaert bound: qubit reduction and explicit perturbations") {
  CHECK(fannes_audenaert_bound(0.0, 5) == 0.0);
  CHECK(fannes_audenaert_bound(0.25, 2) == doctest::Approx(kH14).epsilon(1e-12));
  CHECK(fannes_audenaert_bound(0.25, 4) ==
        doctest::Approx(kH14 + 0.25 * std::log2(3.0)).epsilon(1e-12));

  Rng rng(315);
  for (double eps : {1e-2, 1e-4}) {
    for (int t = 0; t < 20; ++t) {
      const DensityMatrix rho = harness::sample_density(2, rng);
      ComplexMatrix pm = scaled(rho.matrix(), 1.0 - eps);
      accumulate(pm, scaled(ComplexMatrix::identity(2), 0.5), eps);
      const DensityMatrix rho_p = DensityMatrix::from_matrix(std::move(pm));
      const double gap = std::abs(von_neumann_entropy(rho) - von_neumann_entropy(rho_p));
      CHECK(gap <= fannes_audenaert_bound(trace_distance(rho, rho_p), 2) + 1e-12);
    }
  }
}

TEST_CASE("rectangular channels: isometric embeddings are undisturbing") {
  Rng rng(318);
  // a qubit embedded into a qutrit by a Haar isometry
  const ComplexMatrix v = haar_isometry(3, 2, rng);
  const Instrument embed = Instrument::trivial(Channel::from_kraus({v}));
  const DensityMatrix rho = harness::sample_density(2, rng);
  CHECK(std::abs(disturbance(embed.channel(), rho)) < 1e-9);
  CHECK(mutual_information(embed, rho) < 1e-9);

  const TradeoffReport r = full_report(embed, rho);
  CHECK(r.dout == 3);
  CHECK(std::isnan(r.dbar));  // fidelity comparators need din == dout
  CHECK(std::isnan(r.fid_disturbance));
  CHECK(r.slack >= -1e-9);
  CHECK_THROWS_AS(fidelity_disturbances(embed.channel(), rho), DimensionError);
}

TEST_CASE("full_report: closed-form instances and definitional identities") {
  const TradeoffReport idm =
      full_report(Instrument::trivial(Channel::identity(2)), DensityMatrix::maximally_mixed(2));
  CHECK(std::abs(idm.mutual_info) < 1e-9);
  CHECK(std::abs(idm.disturbance) < 1e-9);
  CHECK(std::abs(idm.slack) < 1e-9);

  const DensityMatrix diag34 = DensityMatrix::diagonal({0.75, 0.25});
  const TradeoffReport eq = full_report(Instrument::projective_eigenbasis(diag34), diag34);
  CHECK(eq.mutual_info == doctest::Approx(kH14).epsilon(1e-6));
  CHECK(eq.disturbance == doctest::Approx(kH14).epsilon(1e-6));
  CHECK(std::abs(eq.slack) < 1e-8);

  const TradeoffReport dep = full_report(Instrument::trivial(Channel::depolarizing_qubit()),
                                         DensityMatrix::maximally_mixed(2));
  CHECK(std::abs(dep.mutual_info) < 1e-9);
  CHECK(dep.disturbance == doctest::Approx(2.0).epsilon(1e-9));
  CHECK(dep.slack == doctest::Approx(2.0).epsilon(1e-9));
  CHECK(dep.normalized_d == doctest::Approx(2.0).epsilon(1e-9));

  Rng rng(316);
  for (int t = 0; t < 20; ++t) {
    const std::size_t d = 2 + t % 3;
    const Instrument ins = harness::sample_instrument(d, d * d, rng);
    const DensityMatrix rho = harness::sample_density(d, rng);
    const TradeoffReport r = full_report(ins, rho);
    CHECK(r.disturbance == r.s_rho - r.i_coherent);  // bit-exact by construction
    CHECK(r.slack == r.disturbance - r.mutual_info);
    CHECK(r.normalized_i >= 0.0);
    CHECK(r.normalized_i <= 1.0 + 1e-9);
    CHECK(r.normalized_d >= -1e-9);
    CHECK(r.normalized_d <= 2.0 + 1e-9);
    CHECK(r.slack >= -1e-8);
  }
}
