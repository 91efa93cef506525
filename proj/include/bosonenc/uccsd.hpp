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

#include <span>
#include <vector>

#include "bosonenc/circuit.hpp"
#include "bosonenc/encoding.hpp"
#include "bosonenc/modal.hpp"
#include "bosonenc/pauli.hpp"

namespace bosonenc {

/// One cluster excitation out of the reference: a single (mode1, target1) or,
/// with mode2 >= 0, a double exciting two modes at once.
struct ClusterExcitation {
  int mode1 = 0;
  int target1 = 0;
  int mode2 = -1;
  int target2 = -1;

  bool is_double() const { return mode2 >= 0; }
};

/// The UCCSD excitation set: every single and every pair of singles on two
/// distinct modes, each with one real amplitude slot. Order is deterministic:
/// singles first (modes ascending, targets ascending), then doubles
/// (mode pairs ascending, targets ascending).
struct ClusterOperator {
  SystemSpec system;
  Configuration reference;
  std::vector<ClusterExcitation> excitations;
  std::size_t num_singles = 0;

  std::size_t num_params() const { return excitations.size(); }
  std::size_t num_doubles() const { return excitations.size() - num_singles; }
};

ClusterOperator build_uccsd(const SystemSpec& system,
                            const Configuration& reference);

/// Excitation operator image under the codebook, following the bare product
/// rule: sigma+ on bits the target codeword raises, sigma- on bits the source
/// codeword lowers, (I - Z)/2 where both codewords hold a 1. With a ground
/// state codebook the source word is all-zero and only raising factors
/// remain.
PauliSum bare_excitation(const Codebook& cb, const ClusterExcitation& ex,
                         const Configuration& reference);

/// Anti-hermitian generator of one excitation at unit amplitude, tagged with
/// its amplitude slot.
struct GeneratorBlock {
  int param = 0;
  PauliSum op;
};

/// Per-excitation generators A - A^dag at unit amplitude (coefficients purely
/// imaginary).
std::vector<GeneratorBlock> cluster_to_pauli(const ClusterOperator& t,
                                             const Codebook& cb);

/// Numeric generator sum_k amps[k] * (A_k - A_k^dag).
PauliSum cluster_generator(const ClusterOperator& t, const Codebook& cb,
                           std::span<const double> amps);

/// Trotterized exponential of the parametric generator: each Pauli term
/// becomes a basis-change layer (H for X, Rx(+-pi/2) for Y), a CNOT staircase
/// over its support, an Rz bound to the term's amplitude, and the mirrored
/// tail. `steps` repeats the block sequence with angles divided by `steps`.
Circuit trotterize(const std::vector<GeneratorBlock>& blocks, int width,
                   int steps = 1);

/// Same synthesis for a fixed anti-hermitian generator (no free parameters).
Circuit trotterize(const PauliSum& generator, int steps = 1);

}  // namespace bosonenc
