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
#include <random>

#include "bosonenc/fixtures.hpp"
#include "bosonenc/hamiltonian.hpp"
#include "bosonenc/simulator.hpp"
#include "bosonenc/uccsd.hpp"
#include "bosonenc/vqe.hpp"

using namespace bosonenc;

namespace {

Circuit random_circuit(std::mt19937_64& gen, int width, int gates) {
  std::uniform_real_distribution<double> angle(-2.0, 2.0);
  Circuit c;
  c.width = width;
  for (int i = 0; i < gates; ++i) {
    const int pick = static_cast<int>(gen() % 6);
    const int q = static_cast<int>(gen() % width);
    switch (pick) {
      case 0:
        c.gates.push_back({GateKind::H, q});
        break;
      case 1:
        c.gates.push_back({GateKind::S, q});
        break;
      case 2:
        c.gates.push_back({GateKind::Sdg, q});
        break;
      case 3:
        c.gates.push_back({GateKind::Rz, q, -1, angle(gen)});
        break;
      case 4:
        c.gates.push_back({GateKind::Rx, q, -1, angle(gen)});
        break;
      default: {
        if (width < 2) {
          c.gates.push_back({GateKind::H, q});
          break;
        }
        int t = static_cast<int>(gen() % width);
        while (t == q) t = static_cast<int>(gen() % width);
        c.gates.push_back({GateKind::Cnot, q, t});
        break;
      }
    }
  }
  return c;
}

}  // namespace

TEST_CASE("statevector basics") {
  const Bitstring zero(0, 4);
  Circuit empty;
  empty.width = 4;
  const Statevector s = run_statevector(empty, zero);
  CHECK(std::abs(s.amplitude(0) - 1.0) < 1e-15);

  // CNOT(0,1) on |bit0 = 1> flips bit 1
  Circuit c;
  c.width = 2;
  c.gates.push_back({GateKind::Cnot, 0, 1});
  const Statevector t = run_statevector(c, Bitstring(1, 2));
  CHECK(std::abs(t.amplitude(3) - 1.0) < 1e-15);
}

TEST_CASE("width caps and binding are enforced") {
  Circuit c;
  c.width = 4;
  CHECK_THROWS_AS(run_statevector(c, Bitstring(0, 4), 3), std::invalid_argument);
  CHECK_THROWS_AS(run_statevector(c, Bitstring(0, 3)), std::invalid_argument);
  Circuit unbound;
  unbound.width = 1;
  unbound.num_params = 1;
  Gate g{GateKind::Rz, 0};
  g.param = 0;
  unbound.gates.push_back(g);
  CHECK_THROWS_AS(run_statevector(unbound, Bitstring(0, 1)), std::invalid_argument);
}

TEST_CASE("norm is preserved through random circuits") {
  std::mt19937_64 gen(31);
  for (int trial = 0; trial < 10; ++trial) {
    const int width = 2 + static_cast<int>(gen() % 4);
    const Circuit c = random_circuit(gen, width, 60);
    const Statevector s = run_statevector(c, Bitstring(gen() & ((1u << width) - 1), width));
    CHECK(s.norm() == doctest::Approx(1.0).epsilon(1e-11));
  }
}

TEST_CASE("noiseless density evolution equals the pure projector") {
  std::mt19937_64 gen(32);
  const Circuit c = random_circuit(gen, 3, 40);
  const Bitstring start(5, 3);
  const Statevector psi = run_statevector(c, start);
  const DensityMatrix rho = run_noisy(c, start, NoiseParams(0.0, 0.0));
  for (std::uint64_t r = 0; r < 8; ++r) {
    for (std::uint64_t col = 0; col < 8; ++col) {
      CHECK(std::abs(rho.entry(r, col) -
                     psi.amplitude(r) * std::conj(psi.amplitude(col))) < 1e-12);
    }
  }
  CHECK(rho.trace_real() == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("full two-qubit depolarizing leaves the pair maximally mixed") {
  Circuit c;
  c.width = 3;
  c.gates.push_back({GateKind::H, 0});
  c.gates.push_back({GateKind::Cnot, 0, 1});
  const DensityMatrix rho = run_noisy(c, Bitstring(0, 3), NoiseParams(0.0, 1.0));
  const DensityMatrix pair = rho.partial_trace_keep({0, 1});
  for (std::uint64_t r = 0; r < 4; ++r) {
    for (std::uint64_t col = 0; col < 4; ++col) {
      const cplx want = (r == col) ? cplx{0.25, 0} : cplx{0, 0};
      CHECK(std::abs(pair.entry(r, col) - want) < 1e-12);
    }
  }
}

TEST_CASE("density matrix stays a state through noisy evolution") {
  std::mt19937_64 gen(33);
  const Circuit c = random_circuit(gen, 3, 50);
  const DensityMatrix rho = run_noisy(c, Bitstring(1, 3), NoiseParams(0.05, 0.1));
  CHECK(rho.trace_real() == doctest::Approx(1.0).epsilon(1e-10));
  CHECK(rho.negativity() < 1e-9);
}

TEST_CASE("trace and positivity hold after every gate and channel") {
  std::mt19937_64 gen(44);
  const Circuit c = random_circuit(gen, 3, 25);
  DensityMatrix rho(Bitstring(3, 3));
  for (const auto& g : c.gates) {
    rho.apply(g);
    CHECK(rho.trace_real() == doctest::Approx(1.0).epsilon(1e-11));
    CHECK(rho.negativity() < 1e-9);
    if (g.kind == GateKind::Cnot) {
      rho.depolarize2(g.q0, g.q1, 0.12);
    } else {
      rho.depolarize1(g.q0, 0.04);
    }
    CHECK(rho.trace_real() == doctest::Approx(1.0).epsilon(1e-11));
    CHECK(rho.negativity() < 1e-9);
  }
}

TEST_CASE("maximally mixed state is a fixed point of both channels") {
  // fully depolarize every qubit to prepare I/8
  Circuit prep;
  prep.width = 3;
  for (int q = 0; q < 3; ++q) prep.gates.push_back({GateKind::H, q});
  DensityMatrix rho = run_noisy(prep, Bitstring(0, 3), NoiseParams(1.0, 0.0));
  for (std::uint64_t r = 0; r < 8; ++r) {
    for (std::uint64_t col = 0; col < 8; ++col) {
      const cplx want = (r == col) ? cplx{0.125, 0} : cplx{0, 0};
      CHECK(std::abs(rho.entry(r, col) - want) < 1e-12);
    }
  }
  DensityMatrix after = rho;
  after.depolarize1(1, 0.3);
  after.depolarize2(0, 2, 0.7);
  for (std::uint64_t r = 0; r < 8; ++r) {
    for (std::uint64_t col = 0; col < 8; ++col) {
      CHECK(std::abs(after.entry(r, col) - rho.entry(r, col)) < 1e-12);
    }
  }
}

TEST_CASE("expectation values") {
  const PauliSum z(PauliString::from_letters("Z"), 1.0);
  const Statevector zero(Bitstring(0, 1));
  CHECK(expval(zero, z) == doctest::Approx(1.0));
  const Statevector one(Bitstring(1, 1));
  CHECK(expval(one, z) == doctest::Approx(-1.0));

  std::mt19937_64 gen(34);
  const Circuit c = random_circuit(gen, 3, 30);
  const Statevector psi = run_statevector(c, Bitstring(0, 3));
  CHECK(expval(psi, PauliSum::identity(3)) == doctest::Approx(1.0).epsilon(1e-12));

  PauliSum bad(1);
  bad.add(PauliString::from_letters("X"), cplx{0, 1});
  CHECK_THROWS_AS(expval(zero, bad), std::invalid_argument);
}

TEST_CASE("reference-state energy matches the configuration matrix") {
  const QuarticForceField qff =
      QuarticForceField::from_json(fixtures::qff_json("co2"));
  const SystemSpec sys({2, 2, 2, 2});
  const VibrationalHamiltonian h = assemble_from_qff(qff, sys);
  const Codebook cb = build_codebook(sys, EncodingKind::compact(2));
  const PauliSum hp = to_pauli(h, cb);
  const Configuration ref = Configuration::reference(sys);
  const Statevector psi(cb.encode(ref));
  CHECK(expval(psi, hp) ==
        doctest::Approx(h.configuration_element(ref, ref)).epsilon(1e-12));
}

TEST_CASE("density expectation agrees with statevector expectation") {
  std::mt19937_64 gen(35);
  const Circuit c = random_circuit(gen, 3, 40);
  const Statevector psi = run_statevector(c, Bitstring(2, 3));
  const DensityMatrix rho = run_noisy(c, Bitstring(2, 3), NoiseParams(0, 0));
  PauliSum obs(3);
  obs.add(PauliString::from_letters("XZI"), 0.7);
  obs.add(PauliString::from_letters("IYY"), -0.4);
  obs.add(PauliString::from_letters("ZZZ"), 0.2);
  CHECK(expval(psi, obs) == doctest::Approx(expval(rho, obs)).epsilon(1e-11));
  CHECK(expval_complex(psi, obs).imag() == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("sampled energies converge and degenerate cases are exact") {
  std::mt19937_64 gen(36);
  const Circuit c = random_circuit(gen, 3, 30);
  const Statevector psi = run_statevector(c, Bitstring(0, 3));
  PauliSum obs(3);
  obs.add(PauliString::from_letters("ZII"), 0.8);
  obs.add(PauliString::from_letters("XXI"), -0.5);
  obs.add(PauliString::from_letters("IIZ"), 0.3);
  obs.add(PauliString::identity(3), 2.0);

  const double exact = expval(psi, obs);
  const long shots = 100000;
  // sigma for a +-1 estimator is bounded by sum |c| / sqrt(shots)
  const double sigma_bound = (0.8 + 0.5 + 0.3) / std::sqrt(double(shots));
  Rng rng(99);
  const double est = sample_energy(psi, obs, shots, rng);
  CHECK(std::abs(est - exact) < 5 * sigma_bound);

  // diagonal observable on a basis state: exact at any shot count
  PauliSum diag(2);
  diag.add(PauliString::from_letters("ZI"), 1.5);
  diag.add(PauliString::from_letters("ZZ"), -0.5);
  const Statevector basis(Bitstring(2, 2));
  Rng rng2(7);
  CHECK(sample_energy(basis, diag, 3, rng2) ==
        doctest::Approx(expval(basis, diag)).epsilon(1e-12));

  Rng rng3(8);
  CHECK(sample_energy(psi, PauliSum::identity(3), 1, rng3) == doctest::Approx(1.0));
}

TEST_CASE("sampling is deterministic given the seed") {
  std::mt19937_64 gen(37);
  const Circuit c = random_circuit(gen, 2, 20);
  const Statevector psi = run_statevector(c, Bitstring(0, 2));
  PauliSum obs(2);
  obs.add(PauliString::from_letters("XY"), 1.0);
  obs.add(PauliString::from_letters("ZI"), 0.5);
  Rng a(123), b(123), d(124);
  const double ea = sample_energy(psi, obs, 500, a);
  const double eb = sample_energy(psi, obs, 500, b);
  const double ed = sample_energy(psi, obs, 500, d);
  CHECK(ea == eb);
  CHECK(ea != ed);
}

TEST_CASE("trajectory average approaches the density matrix channel") {
  std::mt19937_64 gen(38);
  const Circuit c = random_circuit(gen, 2, 15);
  const NoiseParams noise(0.08, 0.15);
  const DensityMatrix rho = run_noisy(c, Bitstring(0, 2), noise);
  PauliSum obs(2);
  obs.add(PauliString::from_letters("ZI"), 1.0);
  obs.add(PauliString::from_letters("XX"), 0.6);
  const double exact = expval(rho, obs);

  Rng rng(2026);
  const int trajectories = 4000;
  double mean = 0.0;
  for (int t = 0; t < trajectories; ++t) {
    Rng sub = rng.split(t);
    const Statevector psi = run_noisy_trajectory(c, Bitstring(0, 2), noise, sub);
    mean += expval(psi, obs);
  }
  mean /= trajectories;
  // loose statistical tolerance: the estimator sigma is below 1.6/sqrt(N)
  CHECK(std::abs(mean - exact) < 5 * 1.6 / std::sqrt(double(trajectories)));
}

TEST_CASE("noise bias on the fixture is upward and grows with p2") {
  const QuarticForceField qff =
      QuarticForceField::from_json(fixtures::qff_json("co2"));
  const SystemSpec sys({2, 2, 2, 2});
  const VibrationalHamiltonian h = assemble_from_qff(qff, sys);
  const Codebook cb = build_codebook(sys, EncodingKind::compact(2));
  const PauliSum hp = to_pauli(h, cb);
  const auto cluster = build_uccsd(sys, Configuration::reference(sys));
  const Ansatz ansatz = make_uccsd_ansatz(cluster, cb);

  std::mt19937_64 gen(39);
  std::uniform_real_distribution<double> amp(-0.15, 0.15);
  std::vector<double> amps(ansatz.num_params());
  for (auto& a : amps) a = amp(gen);
  const Circuit bound = ansatz.circuit.bind(amps);

  const Statevector pure = run_statevector(bound, ansatz.initial);
  const double noiseless = expval(pure, hp);

  double previous = noiseless;
  for (double p2 : {1e-3, 1e-2, 5e-2, 2e-1}) {
    const DensityMatrix rho =
        run_noisy(bound, ansatz.initial, NoiseParams(p2 / 10.0, p2));
    const double noisy = expval(rho, hp);
    CHECK(noisy > previous - 1e-9);
    previous = noisy;
  }
  CHECK(previous > noiseless + 1.0);
}
