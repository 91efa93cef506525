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

#include "bosonenc/qeom.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <type_traits>
#include <variant>

#include "bosonenc/rng.hpp"
#include "bosonenc/simulator.hpp"

namespace bosonenc {

namespace {

PauliSum commutator(const PauliSum& a, const PauliSum& b) {
  return multiply(a, b) - multiply(b, a);
}

// symmetric double commutator ([[a, h], b] + [a, [h, b]]) / 2
PauliSum double_commutator(const PauliSum& a, const PauliSum& h,
                           const PauliSum& b) {
  PauliSum inner = commutator(a, h);
  PauliSum term1 = commutator(inner, b);
  PauliSum term2 = commutator(a, commutator(h, b));
  return 0.5 * (term1 + term2);
}

// evaluation backend: prepared state plus optional shot sampling
class Evaluator {
 public:
  Evaluator(const VqeResult& ground, const Ansatz& ansatz,
            const QeomOptions& options)
      : options_(options), rng_(options.seed) {
    Circuit bound = ansatz.circuit.bind(ground.amplitudes);
    if (options.noise.is_noiseless()) {
      state_.emplace<Statevector>(run_statevector(bound, ansatz.initial));
    } else if (bound.width <= options.density_max_width) {
      state_.emplace<DensityMatrix>(
          run_noisy(bound, ansatz.initial, options.noise, options.density_max_width));
    } else {
      Rng traj = rng_.split(0x7261756a);
      state_.emplace<Statevector>(
          run_noisy_trajectory(bound, ansatz.initial, options.noise, traj));
    }
  }

  cplx operator()(const PauliSum& op) {
    if (!options_.shots) {
      return visit_state(
          [&](const auto& s) { return expval_complex(s, op); });
    }
    // sample the hermitian and anti-hermitian parts separately
    PauliSum herm(op.width()), anti(op.width());
    for (const auto& [p, c] : op.terms()) {
      herm.add(p, c.real());
      anti.add(p, c.imag());
    }
    Rng r1 = rng_.split(2 * counter_);
    Rng r2 = rng_.split(2 * counter_ + 1);
    ++counter_;
    return visit_state([&](const auto& s) {
      double re = 0.0, im = 0.0;
      if (!herm.empty()) re = sample_energy(s, herm, *options_.shots, r1);
      if (!anti.empty()) im = sample_energy(s, anti, *options_.shots, r2);
      return cplx{re, im};
    });
  }

 private:
  template <class F>
  cplx visit_state(F&& fn) {
    return std::visit(
        [&](const auto& s) -> cplx {
          if constexpr (std::is_same_v<std::decay_t<decltype(s)>,
                                       std::monostate>) {
            throw std::logic_error("evaluator state not prepared");
          } else {
            return fn(s);
          }
        },
        state_);
  }

  QeomOptions options_;
  Rng rng_;
  std::uint64_t counter_ = 0;
  std::variant<std::monostate, Statevector, DensityMatrix> state_{};
};

}  // namespace

QeomResult qeom_excitations(const VqeResult& ground, const PauliSum& h,
                            const ClusterOperator& ops, const Codebook& cb,
                            const Ansatz& ansatz, const QeomOptions& options) {
  if (!h.is_hermitian()) {
    throw std::invalid_argument("Hamiltonian must be hermitian");
  }
  const int n = static_cast<int>(ops.excitations.size());
  if (n == 0) throw std::invalid_argument("empty excitation basis");

  // excitation operators as exact transition operators |target><reference|
  std::vector<PauliSum> excite;
  std::vector<PauliSum> deexcite;
  excite.reserve(n);
  for (const auto& ex : ops.excitations) {
    PauliSum e =
        ladder_to_pauli(cb, ex.mode1, ex.target1, ops.reference.occupied(ex.mode1));
    if (ex.is_double()) {
      e = multiply(e, ladder_to_pauli(cb, ex.mode2, ex.target2,
                                      ops.reference.occupied(ex.mode2)));
    }
    excite.push_back(e);
    deexcite.push_back(e.adjoint());
  }

  Evaluator eval(ground, ansatz, options);

  QeomResult result;
  result.ground_energy = ground.energy;
  result.m_mat.resize(n, n);
  result.q_mat.resize(n, n);
  result.v_mat.resize(n, n);
  result.w_mat.resize(n, n);
  for (int mu = 0; mu < n; ++mu) {
    for (int nu = 0; nu < n; ++nu) {
      result.m_mat(mu, nu) =
          eval(double_commutator(deexcite[mu], h, excite[nu]));
      result.q_mat(mu, nu) =
          -eval(double_commutator(deexcite[mu], h, deexcite[nu]));
      result.v_mat(mu, nu) = eval(commutator(deexcite[mu], excite[nu]));
      result.w_mat(mu, nu) = -eval(commutator(deexcite[mu], deexcite[nu]));
    }
  }

  // paired-block pencil A [X;Y] = E S [X;Y]
  Eigen::MatrixXcd a(2 * n, 2 * n), s(2 * n, 2 * n);
  a.topLeftCorner(n, n) = result.m_mat;
  a.topRightCorner(n, n) = result.q_mat;
  a.bottomLeftCorner(n, n) = result.q_mat.conjugate();
  a.bottomRightCorner(n, n) = result.m_mat.conjugate();
  s.topLeftCorner(n, n) = result.v_mat;
  s.topRightCorner(n, n) = result.w_mat;
  s.bottomLeftCorner(n, n) = -result.w_mat.conjugate();
  s.bottomRightCorner(n, n) = -result.v_mat.conjugate();

  // pseudo-inverse of the metric with a singular-value floor
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(
      s, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const auto& sv = svd.singularValues();
  Eigen::VectorXd inv_sv(sv.size());
  for (int i = 0; i < sv.size(); ++i) {
    if (sv(i) < options.metric_floor) {
      result.regularized = true;
      inv_sv(i) = 0.0;
    } else {
      inv_sv(i) = 1.0 / sv(i);
    }
  }
  const Eigen::MatrixXcd pinv =
      svd.matrixV() * inv_sv.asDiagonal() * svd.matrixU().adjoint();

  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(pinv * a);
  if (es.info() != Eigen::Success) {
    throw std::runtime_error("equation-of-motion eigensolver failed");
  }

  std::vector<double> energies;
  for (int i = 0; i < es.eigenvalues().size(); ++i) {
    const cplx lambda = es.eigenvalues()(i);
    if (lambda.real() <= 1e-9) continue;
    if (std::abs(lambda.imag()) > 0.1 * (1.0 + std::abs(lambda.real()))) continue;
    energies.push_back(lambda.real());
  }
  std::sort(energies.begin(), energies.end());
  result.excitation_energies = std::move(energies);
  for (double e : result.excitation_energies) {
    result.total_energies.push_back(result.ground_energy + e);
  }
  return result;
}

}  // namespace bosonenc
