// Copyright 2026 The bosonenc authors
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

#include <doctest.h>

#include <stdexcept>

#include <cmath>

#include "bosonenc/fixtures.hpp"
#include "bosonenc/hamiltonian.hpp"

using namespace bosonenc;

namespace {

// ladder-matrix oracle: q = (a + a^dag)/sqrt(2) built in a truncated basis
// large enough that polynomial operators are exact on the probed block
Eigen::MatrixXd ladder_q(int dim) {
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(dim, dim);
  for (int k = 1; k < dim; ++k) a(k - 1, k) = std::sqrt(static_cast<double>(k));
  return (a + a.transpose()) / std::sqrt(2.0);
}

Eigen::MatrixXd ladder_p2(int dim) {
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(dim, dim);
  for (int k = 1; k < dim; ++k) a(k - 1, k) = std::sqrt(static_cast<double>(k));
  const Eigen::MatrixXd d = (a.transpose() - a) / std::sqrt(2.0);  // i*p
  return -(d * d);
}

}  // namespace

TEST_CASE("harmonic oscillator matrix elements match the ladder oracle") {
  const int dim = 24;
  const Eigen::MatrixXd q = ladder_q(dim);
  const Eigen::MatrixXd q2 = q * q;
  const Eigen::MatrixXd q3 = q2 * q;
  const Eigen::MatrixXd q4 = q3 * q;
  const Eigen::MatrixXd d2 = -ladder_p2(dim);  // d^2/dq^2 = -p^2
  for (int m = 0; m < 12; ++m) {
    for (int n = 0; n < 12; ++n) {
      CHECK(ho_matrix_element(HoOperator::Q, m, n) ==
            doctest::Approx(q(m, n)).epsilon(1e-12));
      CHECK(ho_matrix_element(HoOperator::Q2, m, n) ==
            doctest::Approx(q2(m, n)).epsilon(1e-12));
      CHECK(ho_matrix_element(HoOperator::Q3, m, n) ==
            doctest::Approx(q3(m, n)).epsilon(1e-12));
      CHECK(ho_matrix_element(HoOperator::Q4, m, n) ==
            doctest::Approx(q4(m, n)).epsilon(1e-12));
      CHECK(ho_matrix_element(HoOperator::D2, m, n) ==
            doctest::Approx(d2(m, n)).epsilon(1e-12));
    }
  }
}

TEST_CASE("named matrix elements") {
  CHECK(ho_matrix_element(HoOperator::Q, 0, 1) ==
        doctest::Approx(1.0 / std::sqrt(2.0)));
  for (int n = 0; n < 8; ++n) {
    CHECK(ho_matrix_element(HoOperator::Q, n, n) == 0.0);
  }
  // kinetic energy -1/2 d^2/dq^2 on the ground state
  CHECK(-0.5 * ho_matrix_element(HoOperator::D2, 0, 0) == doctest::Approx(0.25));
}

TEST_CASE("pure harmonic assembly gives the oscillator spectrum") {
  QuarticForceField qff;
  qff.omega = {431.0};
  const VibrationalHamiltonian h = assemble_from_qff(qff, SystemSpec({2}));
  CHECK(h.one_mode(0)(0, 0) == doctest::Approx(431.0 / 2));
  CHECK(h.one_mode(0)(1, 1) == doctest::Approx(3 * 431.0 / 2));
  CHECK(std::abs(h.one_mode(0)(0, 1)) < 1e-12);
}

TEST_CASE("small quartic term shifts the ground energy at first order") {
  const double k = 0.3;  // small versus omega = 1000
  QuarticForceField qff;
  qff.omega = {1000.0};
  qff.quartic.push_back({{0, 0, 0, 0}, k});
  const VibrationalHamiltonian h = assemble_from_qff(qff, SystemSpec({14}));
  const double e0 = exact_diagonalize(h).front();
  // first order: omega/2 + k <0|q^4|0> = omega/2 + 3k/4
  CHECK(e0 == doctest::Approx(500.0 + 0.75 * k).epsilon(1e-6));
  // against a larger-basis dense diagonalization
  const VibrationalHamiltonian big = assemble_from_qff(qff, SystemSpec({26}));
  CHECK(e0 == doctest::Approx(exact_diagonalize(big).front()).epsilon(1e-9));
}

TEST_CASE("uncoupled modes separate") {
  QuarticForceField qff;
  qff.omega = {800.0, 1200.0};
  qff.quartic.push_back({{0, 0, 0, 0}, 2.0});
  qff.quartic.push_back({{1, 1, 1, 1}, 3.0});
  const SystemSpec sys({4, 4});
  const VibrationalHamiltonian h = assemble_from_qff(qff, sys);

  QuarticForceField qa;
  qa.omega = {800.0};
  qa.quartic.push_back({{0, 0, 0, 0}, 2.0});
  QuarticForceField qb;
  qb.omega = {1200.0};
  qb.quartic.push_back({{0, 0, 0, 0}, 3.0});
  const auto ea = exact_diagonalize(assemble_from_qff(qa, SystemSpec({4})));
  const auto eb = exact_diagonalize(assemble_from_qff(qb, SystemSpec({4})));

  std::vector<double> sums;
  for (double x : ea) {
    for (double y : eb) sums.push_back(x + y);
  }
  std::sort(sums.begin(), sums.end());
  const auto full = exact_diagonalize(h);
  REQUIRE(full.size() == sums.size());
  for (std::size_t i = 0; i < full.size(); ++i) {
    CHECK(full[i] == doctest::Approx(sums[i]).epsilon(1e-10));
  }
}

TEST_CASE("uncoupled harmonic ladder spectrum") {
  QuarticForceField qff;
  qff.omega = {500.0, 700.0};
  const VibrationalHamiltonian h = assemble_from_qff(qff, SystemSpec({3, 3}));
  const auto ev = exact_diagonalize(h);
  std::vector<double> expected;
  for (int n0 = 0; n0 < 3; ++n0) {
    for (int n1 = 0; n1 < 3; ++n1) {
      expected.push_back(500.0 * (n0 + 0.5) + 700.0 * (n1 + 0.5));
    }
  }
  std::sort(expected.begin(), expected.end());
  for (std::size_t i = 0; i < expected.size(); ++i) {
    CHECK(ev[i] == doctest::Approx(expected[i]).epsilon(1e-12));
  }
}

TEST_CASE("ground state obeys the variational bound") {
  const QuarticForceField qff =
      QuarticForceField::from_json(fixtures::qff_json("co2"));
  const SystemSpec sys({2, 2, 2, 2});
  const VibrationalHamiltonian h = assemble_from_qff(qff, sys);
  const double e0 = exact_diagonalize(h).front();
  std::vector<int> occ(4, 0);
  for (int i = 0; i < 16; ++i) {
    for (int l = 0; l < 4; ++l) occ[l] = (i >> l) & 1;
    const Configuration c(sys, occ);
    CHECK(h.configuration_element(c, c) >= e0 - 1e-9);
  }
}

TEST_CASE("three-mode coupling terms are rejected") {
  QuarticForceField qff;
  qff.omega = {100.0, 200.0, 300.0};
  qff.cubic.push_back({{0, 1, 2}, 1.0});
  CHECK_THROWS_AS(assemble_from_qff(qff, SystemSpec({2, 2, 2})),
                  std::invalid_argument);
}

TEST_CASE("force field json round trip") {
  const QuarticForceField qff =
      QuarticForceField::from_json(fixtures::qff_json("co2"));
  CHECK(qff.omega.size() == 4);
  CHECK(qff.omega[1] == qff.omega[2]);
  const QuarticForceField back = QuarticForceField::from_json(qff.to_json());
  CHECK(back.omega == qff.omega);
  CHECK(back.cubic.size() == qff.cubic.size());
  CHECK(back.quartic.size() == qff.quartic.size());
}

TEST_CASE("diagonal hamiltonian maps to I and Z letters only") {
  QuarticForceField qff;
  qff.omega = {300.0, 500.0};
  const SystemSpec sys({2, 2});
  const VibrationalHamiltonian h = assemble_from_qff(qff, sys);
  for (const auto& kind : {EncodingKind::standard_binary(), EncodingKind::compact(2)}) {
    const Codebook cb = build_codebook(sys, kind, true);
    const PauliSum hp = to_pauli(h, cb);
    for (const auto& [p, c] : hp.terms()) {
      CHECK(p.x == 0);  // no X or Y letters on a diagonal operator
    }
  }
}

TEST_CASE("encoded hamiltonian matches the configuration matrix") {
  // the central encoding-correctness oracle, on an anharmonic coupled system
  QuarticForceField qff;
  qff.omega = {900.0, 1100.0};
  qff.cubic.push_back({{0, 0, 1}, -14.0});
  qff.quartic.push_back({{0, 0, 1, 1}, 9.0});
  qff.quartic.push_back({{0, 0, 0, 0}, 3.0});
  const SystemSpec sys({3, 3});
  const VibrationalHamiltonian h = assemble_from_qff(qff, sys);
  const Eigen::MatrixXd config = configuration_matrix(h);

  std::vector<Codebook> books;
  books.push_back(build_codebook(sys, EncodingKind::standard_binary()));
  books.push_back(build_codebook(sys, EncodingKind::gray_code()));
  books.push_back(build_codebook(sys, EncodingKind::compact(2)));
  books.push_back(build_codebook(sys, EncodingKind::direct(), false));
  for (const auto& cb : books) {
    const PauliSum hp = to_pauli(h, cb);
    CHECK(hp.is_hermitian());
    const Eigen::MatrixXcd sub =
        matrix_on_states(hp, encoded_configuration_states(cb));
    CHECK((sub - config.cast<cplx>()).cwiseAbs().maxCoeff() < 1e-10);
  }
}

TEST_CASE("one mode, two modals: direct and binary give the same spectrum") {
  QuarticForceField qff;
  qff.omega = {1000.0};
  qff.cubic.push_back({{0, 0, 0}, -20.0});
  const SystemSpec sys({2});
  const VibrationalHamiltonian h = assemble_from_qff(qff, sys);
  const auto exact = exact_diagonalize(h);

  const Codebook sb = build_codebook(sys, EncodingKind::standard_binary());
  const Codebook dm = build_codebook(sys, EncodingKind::direct(), false);
  CHECK(sb.total_qubits() == 1);
  CHECK(dm.total_qubits() == 2);
  for (const Codebook* cb : {&sb, &dm}) {
    const Eigen::MatrixXcd sub =
        matrix_on_states(to_pauli(h, *cb), encoded_configuration_states(*cb));
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(sub);
    for (int i = 0; i < solver.eigenvalues().size(); ++i) {
      CHECK(solver.eigenvalues()(i) == doctest::Approx(exact[i]).epsilon(1e-10));
    }
  }
}

TEST_CASE("fixture register sizes: four compact qubits, eight direct qubits") {
  const QuarticForceField qff =
      QuarticForceField::from_json(fixtures::qff_json("co2"));
  const SystemSpec sys(std::vector<int>(qff.omega.size(), 2));
  const VibrationalHamiltonian h = assemble_from_qff(qff, sys);
  const Codebook cea = build_codebook(sys, EncodingKind::compact(2));
  const Codebook dm = build_codebook(sys, EncodingKind::direct(), false);
  CHECK(to_pauli(h, cea).width() == 4);
  CHECK(to_pauli(h, dm).width() == 8);
}

TEST_CASE("symmetric fixture has a degenerate first excited pair") {
  const QuarticForceField qff =
      QuarticForceField::from_json(fixtures::qff_json("symmetric2"));
  for (int modals : {2, 3, 4}) {
    const VibrationalHamiltonian h =
        assemble_from_qff(qff, SystemSpec({modals, modals}));
    const auto ev = exact_diagonalize(h);
    CHECK(ev[1] == doctest::Approx(ev[2]).epsilon(1e-12));
    CHECK(ev[1] - ev[0] > 1.0);
  }
}

TEST_CASE("dimension cap") {
  QuarticForceField qff;
  qff.omega = {100.0, 100.0};
  const VibrationalHamiltonian h = assemble_from_qff(qff, SystemSpec({64, 64}));
  CHECK_THROWS_AS(exact_diagonalize(h, 1000), std::invalid_argument);
}
