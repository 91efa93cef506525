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

#include <complex>
#include <vector>

#include "bosonenc/circuit.hpp"
#include "bosonenc/modal.hpp"
#include "bosonenc/pauli.hpp"
#include "bosonenc/rng.hpp"

namespace bosonenc {

/// Depolarizing error probabilities: p1 after every one-qubit gate on its
/// qubit, p2 after every CNOT on its qubit pair.
struct NoiseParams {
  double p1 = 0.0;
  double p2 = 0.0;

  NoiseParams() = default;
  NoiseParams(double one_qubit, double two_qubit);
  bool is_noiseless() const { return p1 == 0.0 && p2 == 0.0; }
};

class Statevector {
 public:
  explicit Statevector(const Bitstring& basis_state);
  Statevector(int width, std::vector<cplx> amplitudes);

  int width() const { return width_; }
  std::size_t dim() const { return amps_.size(); }
  const std::vector<cplx>& amplitudes() const { return amps_; }
  cplx amplitude(std::uint64_t basis) const { return amps_[basis]; }

  double norm() const;
  /// max_j |a_j - b_j|
  double distance(const Statevector& other) const;

  void apply(const Gate& g);
  void apply_pauli(const PauliString& p);

 private:
  int width_;
  std::vector<cplx> amps_;
};

class DensityMatrix {
 public:
  explicit DensityMatrix(const Bitstring& basis_state);
  explicit DensityMatrix(const Statevector& pure);

  int width() const { return width_; }
  std::size_t dim() const { return dim_; }
  cplx entry(std::uint64_t row, std::uint64_t col) const {
    return rho_[row * dim_ + col];
  }

  double trace_real() const;
  /// Largest |eigenvalue clipping|: max(0, -lambda_min).
  double negativity() const;

  void apply(const Gate& g);
  void depolarize1(int q, double p);
  void depolarize2(int q0, int q1, double p);

  /// Reduced density matrix over the given qubits (ascending order kept).
  DensityMatrix partial_trace_keep(const std::vector<int>& keep) const;

 private:
  DensityMatrix(int width);

  int width_;
  std::size_t dim_;
  std::vector<cplx> rho_;
};

/// Exact gate-by-gate unitary evolution; the circuit must be bound.
Statevector run_statevector(const Circuit& c, const Bitstring& initial,
                            int max_width = 20);

/// Density-matrix evolution with a depolarizing channel after every gate:
/// p1 on the qubit of each one-qubit gate, p2 on both qubits of each CNOT.
/// Deterministic; no sampling is involved.
DensityMatrix run_noisy(const Circuit& c, const Bitstring& initial,
                        const NoiseParams& noise, int max_width = 10);

/// One stochastic Pauli-insertion trajectory of the same channel, for widths
/// beyond the density-matrix cap. Deterministic given the generator state.
Statevector run_noisy_trajectory(const Circuit& c, const Bitstring& initial,
                                 const NoiseParams& noise, Rng& rng,
                                 int max_width = 20);

/// <psi| obs |psi> for a hermitian observable.
double expval(const Statevector& state, const PauliSum& obs);
/// tr(rho * obs) for a hermitian observable.
double expval(const DensityMatrix& state, const PauliSum& obs);

/// Complex expectation of an arbitrary operator (no hermiticity check).
cplx expval_complex(const Statevector& state, const PauliSum& op);
cplx expval_complex(const DensityMatrix& state, const PauliSum& op);

/// Shot-noise estimate of <obs> by independent term-wise eigenvalue sampling:
/// each Pauli term is a +-1 observable measured `shots` times in its own
/// eigenbasis. Converges to expval as shots grows; deterministic given rng.
double sample_energy(const Statevector& state, const PauliSum& obs, long shots,
                     Rng& rng);
double sample_energy(const DensityMatrix& state, const PauliSum& obs,
                     long shots, Rng& rng);

}  // namespace bosonenc
