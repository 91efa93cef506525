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

#pragma once

#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "bosonenc/circuit.hpp"
#include "bosonenc/pauli.hpp"
#include "bosonenc/simulator.hpp"
#include "bosonenc/uccsd.hpp"

namespace bosonenc {

/// Linear-approximation trust-region settings. The radius starts at
/// rho_begin, halves whenever the model stops producing progress, and the
/// search stops below rho_end.
struct CobylaConfig {
  double rho_begin = 0.5;
  double rho_end = 1e-6;
  int max_evals = 500;
};

struct CobylaResult {
  std::vector<double> x;
  double fval = 0.0;
  int evaluations = 0;
  bool converged = false;
};

/// Derivative-free minimization of f via linear interpolation on a simplex of
/// n+1 points and steepest-descent steps of trust-region length. Returns the
/// best point evaluated; converged is false when the budget ran out before
/// the radius reached rho_end.
CobylaResult cobyla_minimize(
    const std::function<double(std::span<const double>)>& f,
    std::vector<double> x0, const CobylaConfig& config);

/// Parametric state-preparation circuit plus its initial basis state.
struct Ansatz {
  Circuit circuit;
  Bitstring initial;

  int num_params() const { return circuit.num_params; }
};

/// Trotterized UCCSD ansatz for the codebook, peephole-optimized by default.
Ansatz make_uccsd_ansatz(const ClusterOperator& op, const Codebook& cb,
                         bool optimize = true, int trotter_steps = 1);

struct VqeOptions {
  NoiseParams noise{};
  /// Shots per energy evaluation; nullopt means exact expectation values.
  std::optional<long> shots;
  CobylaConfig optimizer{};
  std::uint64_t seed = 0;
  int statevector_max_width = 20;
  int density_max_width = 10;
};

struct VqeResult {
  double energy = 0.0;
  std::vector<double> amplitudes;
  int evaluations = 0;
  bool converged = false;
  std::uint64_t seed = 0;
  NoiseParams noise{};
};

/// Minimize <H> over the ansatz amplitudes from a zero start. Noiseless
/// configurations run on the statevector backend; noisy ones evolve the
/// density matrix (or a stochastic trajectory above the width cap). With
/// shots set, every evaluation adds seeded shot noise.
VqeResult vqe_minimize(const PauliSum& h, const Ansatz& ansatz,
                       const VqeOptions& options);

}  // namespace bosonenc
