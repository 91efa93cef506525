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

#include <map>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "bosonenc/modal.hpp"
#include "bosonenc/pauli.hpp"

namespace bosonenc {

/// Operators with analytic matrix elements in the harmonic oscillator basis,
/// in dimensionless coordinates q = (a + a^dag)/sqrt(2).
enum class HoOperator { Q, Q2, Q3, Q4, D2 };

/// <m| op |n> in the HO basis, exact.
double ho_matrix_element(HoOperator op, int m, int n);

/// One term of a quartic force field: coeff * prod_i q_{modes[i]}, with the
/// coefficient in cm^-1 and the coordinates dimensionless. Repeated mode
/// indices raise the power; at most two distinct modes per term.
struct QffTerm {
  std::vector<int> modes;
  double coeff = 0.0;
};

/// Harmonic frequencies plus cubic and quartic anharmonic terms. The full
/// potential is sum_l (omega_l/2) q_l^2 + the listed terms; the kinetic part
/// (omega_l/2) p_l^2 is implied.
struct QuarticForceField {
  std::vector<double> omega;
  std::vector<QffTerm> cubic;
  std::vector<QffTerm> quartic;
  double v0 = 0.0;

  static QuarticForceField from_json(const std::string& text);
  std::string to_json() const;
};

/// n-body expansion Hamiltonian truncated at two-mode couplings, expressed in
/// a modal basis: a scalar offset, one N_l x N_l block per mode, and one
/// coupling tensor per mode pair. All energies in cm^-1.
class VibrationalHamiltonian {
 public:
  VibrationalHamiltonian(SystemSpec system, double v0,
                         std::vector<Eigen::MatrixXd> one_mode,
                         std::map<std::pair<int, int>, Eigen::MatrixXd> two_mode);

  const SystemSpec& system() const { return system_; }
  double v0() const { return v0_; }
  const Eigen::MatrixXd& one_mode(int l) const;

  /// Coupling tensor for the pair l < m as a matrix with row index
  /// r * N_m + p and column index s * N_m + q; zero matrix if the pair is
  /// uncoupled.
  const Eigen::MatrixXd& two_mode(int l, int m) const;
  const std::map<std::pair<int, int>, Eigen::MatrixXd>& couplings() const {
    return two_mode_;
  }

  /// <Phi_r| H |Phi_s> over full configurations.
  double configuration_element(const Configuration& r,
                               const Configuration& s) const;

 private:
  SystemSpec system_;
  double v0_ = 0.0;
  std::vector<Eigen::MatrixXd> one_mode_;
  std::map<std::pair<int, int>, Eigen::MatrixXd> two_mode_;
  Eigen::MatrixXd empty_;
};

/// Build the modal-basis Hamiltonian from a quartic force field, truncating
/// each mode to the requested number of modals. Terms touching three or more
/// distinct modes are rejected.
VibrationalHamiltonian assemble_from_qff(const QuarticForceField& qff,
                                         const SystemSpec& system);

/// Dense matrix of H over the configuration basis (row-major configuration
/// index with the last mode fastest).
Eigen::MatrixXd configuration_matrix(const VibrationalHamiltonian& h);

/// Ascending eigenvalues of the configuration-space matrix.
std::vector<double> exact_diagonalize(const VibrationalHamiltonian& h,
                                      std::size_t dim_cap = std::size_t{1} << 20);

/// Map H to a qubit operator under the codebook:
/// sum_l sum_rs h^l_rs A^l_rs + cross terms + v0, hermitian and simplified.
PauliSum to_pauli(const VibrationalHamiltonian& h, const Codebook& cb);

/// Encoded global-register basis states of all configurations, ordered like
/// configuration_matrix rows (last mode fastest).
std::vector<Bitstring> encoded_configuration_states(const Codebook& cb);

}  // namespace bosonenc
