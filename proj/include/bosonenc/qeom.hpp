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

#include <optional>
#include <vector>

#include <Eigen/Dense>

#include "bosonenc/pauli.hpp"
#include "bosonenc/uccsd.hpp"
#include "bosonenc/vqe.hpp"

namespace bosonenc {

struct QeomOptions {
  NoiseParams noise{};
  /// Shots per expectation value; nullopt means exact.
  std::optional<long> shots;
  std::uint64_t seed = 0;
  int density_max_width = 10;
  /// Floor applied to the metric's singular values when it is near-singular.
  double metric_floor = 1e-10;
};

struct QeomResult {
  /// Positive excitation branch, ascending (cm^-1).
  std::vector<double> excitation_energies;
  double ground_energy = 0.0;
  /// ground_energy + each excitation energy.
  std::vector<double> total_energies;
  Eigen::MatrixXcd m_mat, q_mat, v_mat, w_mat;
  /// Set when the metric needed its singular values floored.
  bool regularized = false;
};

/// Excited states on top of a VQE ground state via the equation-of-motion
/// generalized eigenvalue problem. The excitation basis is the UCCSD set used
/// for the ansatz, mapped to transition operators under the codebook; matrix
/// elements are double-commutator expectation values on the prepared state.
QeomResult qeom_excitations(const VqeResult& ground, const PauliSum& h,
                            const ClusterOperator& ops, const Codebook& cb,
                            const Ansatz& ansatz, const QeomOptions& options);

}  // namespace bosonenc
