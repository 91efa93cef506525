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

#include "bosonenc/vqe.hpp"

#include <stdexcept>

#include "bosonenc/rng.hpp"

namespace bosonenc {

Ansatz make_uccsd_ansatz(const ClusterOperator& op, const Codebook& cb,
                         bool optimize, int trotter_steps) {
  Circuit circuit =
      trotterize(cluster_to_pauli(op, cb), cb.total_qubits(), trotter_steps);
  if (optimize) circuit = peephole_optimize(circuit);
  return Ansatz{std::move(circuit), cb.encode(op.reference)};
}

VqeResult vqe_minimize(const PauliSum& h, const Ansatz& ansatz,
                       const VqeOptions& options) {
  if (!h.is_hermitian()) {
    throw std::invalid_argument("Hamiltonian must be hermitian");
  }
  if (h.width() != ansatz.circuit.width) {
    throw std::invalid_argument("Hamiltonian width does not match ansatz");
  }

  const Rng master(options.seed);
  long eval_index = 0;

  auto energy = [&](std::span<const double> amps) {
    Circuit bound = ansatz.circuit.bind(amps);
    Rng eval_rng = master.split(static_cast<std::uint64_t>(eval_index++));
    if (options.noise.is_noiseless()) {
      Statevector state =
          run_statevector(bound, ansatz.initial, options.statevector_max_width);
      if (options.shots) return sample_energy(state, h, *options.shots, eval_rng);
      return expval(state, h);
    }
    if (bound.width <= options.density_max_width) {
      DensityMatrix rho =
          run_noisy(bound, ansatz.initial, options.noise, options.density_max_width);
      if (options.shots) return sample_energy(rho, h, *options.shots, eval_rng);
      return expval(rho, h);
    }
    Statevector state = run_noisy_trajectory(bound, ansatz.initial, options.noise,
                                             eval_rng, options.statevector_max_width);
    if (options.shots) return sample_energy(state, h, *options.shots, eval_rng);
    return expval(state, h);
  };

  std::vector<double> start(ansatz.num_params(), 0.0);
  CobylaResult opt = cobyla_minimize(energy, std::move(start), options.optimizer);

  VqeResult result;
  result.energy = opt.fval;
  result.amplitudes = std::move(opt.x);
  result.evaluations = opt.evaluations;
  result.converged = opt.converged;
  result.seed = options.seed;
  result.noise = options.noise;
  return result;
}

}  // namespace bosonenc
