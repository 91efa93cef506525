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

#include "bosonenc/simulator.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <Eigen/Dense>

namespace bosonenc {

namespace {

struct OneQubitGate {
  cplx u00, u01, u10, u11;
  bool diagonal;
};

OneQubitGate gate_matrix(const Gate& g) {
  constexpr double inv_sqrt2 = 0.70710678118654752440;
  switch (g.kind) {
    case GateKind::H:
      return {inv_sqrt2, inv_sqrt2, inv_sqrt2, -inv_sqrt2, false};
    case GateKind::S:
      return {1.0, 0.0, 0.0, {0.0, 1.0}, true};
    case GateKind::Sdg:
      return {1.0, 0.0, 0.0, {0.0, -1.0}, true};
    case GateKind::Rz: {
      const double h = 0.5 * g.angle;
      return {{std::cos(h), -std::sin(h)}, 0.0, 0.0, {std::cos(h), std::sin(h)},
              true};
    }
    case GateKind::Rx: {
      const double h = 0.5 * g.angle;
      const cplx c{std::cos(h), 0.0};
      const cplx s{0.0, -std::sin(h)};
      return {c, s, s, c, false};
    }
    default:
      throw std::logic_error("not a one-qubit gate");
  }
}

inline std::uint64_t remove_bit(std::uint64_t i, int q) {
  const std::uint64_t low = i & ((std::uint64_t{1} << q) - 1);
  return ((i >> (q + 1)) << q) | low;
}

}  // namespace

NoiseParams::NoiseParams(double one_qubit, double two_qubit)
    : p1(one_qubit), p2(two_qubit) {
  if (p1 < 0 || p1 > 1 || p2 < 0 || p2 > 1) {
    throw std::invalid_argument("error probabilities must lie in [0, 1]");
  }
}

Statevector::Statevector(const Bitstring& basis_state)
    : width_(basis_state.width()),
      amps_(std::size_t{1} << basis_state.width(), cplx{0, 0}) {
  amps_[basis_state.value()] = 1.0;
}

Statevector::Statevector(int width, std::vector<cplx> amplitudes)
    : width_(width), amps_(std::move(amplitudes)) {
  if (amps_.size() != (std::size_t{1} << width)) {
    throw std::invalid_argument("amplitude vector has wrong dimension");
  }
}

double Statevector::norm() const {
  double n = 0;
  for (const auto& a : amps_) n += std::norm(a);
  return std::sqrt(n);
}

double Statevector::distance(const Statevector& other) const {
  if (other.width_ != width_) throw std::invalid_argument("width mismatch");
  double d = 0;
  for (std::size_t i = 0; i < amps_.size(); ++i) {
    d = std::max(d, std::abs(amps_[i] - other.amps_[i]));
  }
  return d;
}

void Statevector::apply(const Gate& g) {
  const std::size_t dim = amps_.size();
  if (g.kind == GateKind::Cnot) {
    const std::uint64_t cbit = std::uint64_t{1} << g.q0;
    const std::uint64_t tbit = std::uint64_t{1} << g.q1;
    for (std::uint64_t i = 0; i < dim; ++i) {
      if ((i & cbit) && !(i & tbit)) {
        std::swap(amps_[i], amps_[i | tbit]);
      }
    }
    return;
  }
  const auto u = gate_matrix(g);
  const std::uint64_t bit = std::uint64_t{1} << g.q0;
  if (u.diagonal) {
    for (std::uint64_t i = 0; i < dim; ++i) {
      amps_[i] *= (i & bit) ? u.u11 : u.u00;
    }
    return;
  }
  for (std::uint64_t i = 0; i < dim; ++i) {
    if (!(i & bit)) {
      const cplx a = amps_[i];
      const cplx b = amps_[i | bit];
      amps_[i] = u.u00 * a + u.u01 * b;
      amps_[i | bit] = u.u10 * a + u.u11 * b;
    }
  }
}

void Statevector::apply_pauli(const PauliString& p) {
  if (p.width != width_) throw std::invalid_argument("width mismatch");
  const std::size_t dim = amps_.size();
  if (p.x == 0) {
    for (std::uint64_t j = 0; j < dim; ++j) amps_[j] *= p.basis_phase(j);
    return;
  }
  for (std::uint64_t j = 0; j < dim; ++j) {
    const std::uint64_t k = j ^ p.x;
    if (j < k) {
      const cplx a = amps_[j];
      const cplx b = amps_[k];
      amps_[k] = p.basis_phase(j) * a;
      amps_[j] = p.basis_phase(k) * b;
    }
  }
}

DensityMatrix::DensityMatrix(int width)
    : width_(width), dim_(std::size_t{1} << width), rho_(dim_ * dim_, cplx{0, 0}) {}

DensityMatrix::DensityMatrix(const Bitstring& basis_state)
    : DensityMatrix(basis_state.width()) {
  rho_[basis_state.value() * dim_ + basis_state.value()] = 1.0;
}

DensityMatrix::DensityMatrix(const Statevector& pure)
    : DensityMatrix(pure.width()) {
  const auto& a = pure.amplitudes();
  for (std::size_t r = 0; r < dim_; ++r) {
    for (std::size_t c = 0; c < dim_; ++c) {
      rho_[r * dim_ + c] = a[r] * std::conj(a[c]);
    }
  }
}

double DensityMatrix::trace_real() const {
  double t = 0;
  for (std::size_t i = 0; i < dim_; ++i) t += rho_[i * dim_ + i].real();
  return t;
}

double DensityMatrix::negativity() const {
  Eigen::Map<const Eigen::MatrixXcd> m(rho_.data(), dim_, dim_);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(m.adjoint());
  const double lambda_min = solver.eigenvalues().minCoeff();
  return std::max(0.0, -lambda_min);
}

void DensityMatrix::apply(const Gate& g) {
  if (g.kind == GateKind::Cnot) {
    const std::uint64_t cbit = std::uint64_t{1} << g.q0;
    const std::uint64_t tbit = std::uint64_t{1} << g.q1;
    // rows, then columns
    for (std::uint64_t r = 0; r < dim_; ++r) {
      if ((r & cbit) && !(r & tbit)) {
        cplx* a = rho_.data() + r * dim_;
        cplx* b = rho_.data() + (r | tbit) * dim_;
        for (std::size_t c = 0; c < dim_; ++c) std::swap(a[c], b[c]);
      }
    }
    for (std::uint64_t c = 0; c < dim_; ++c) {
      if ((c & cbit) && !(c & tbit)) {
        for (std::size_t r = 0; r < dim_; ++r) {
          std::swap(rho_[r * dim_ + c], rho_[r * dim_ + (c | tbit)]);
        }
      }
    }
    return;
  }
  const auto u = gate_matrix(g);
  const std::uint64_t bit = std::uint64_t{1} << g.q0;
  if (u.diagonal) {
    for (std::uint64_t r = 0; r < dim_; ++r) {
      const cplx dr = (r & bit) ? u.u11 : u.u00;
      cplx* row = rho_.data() + r * dim_;
      for (std::uint64_t c = 0; c < dim_; ++c) {
        row[c] *= dr * std::conj((c & bit) ? u.u11 : u.u00);
      }
    }
    return;
  }
  // U rho
  for (std::uint64_t r = 0; r < dim_; ++r) {
    if (!(r & bit)) {
      cplx* row0 = rho_.data() + r * dim_;
      cplx* row1 = rho_.data() + (r | bit) * dim_;
      for (std::size_t c = 0; c < dim_; ++c) {
        const cplx a = row0[c];
        const cplx b = row1[c];
        row0[c] = u.u00 * a + u.u01 * b;
        row1[c] = u.u10 * a + u.u11 * b;
      }
    }
  }
  // rho U^dag
  const cplx c00 = std::conj(u.u00), c01 = std::conj(u.u01);
  const cplx c10 = std::conj(u.u10), c11 = std::conj(u.u11);
  for (std::uint64_t r = 0; r < dim_; ++r) {
    cplx* row = rho_.data() + r * dim_;
    for (std::uint64_t c = 0; c < dim_; ++c) {
      if (!(c & bit)) {
        const cplx a = row[c];
        const cplx b = row[c | bit];
        row[c] = a * c00 + b * c01;
        row[c | bit] = a * c10 + b * c11;
      }
    }
  }
}

void DensityMatrix::depolarize1(int q, double p) {
  if (p == 0.0) return;
  const std::size_t half = dim_ / 2;
  const std::uint64_t bit = std::uint64_t{1} << q;
  // sigma = tr_q(rho)
  std::vector<cplx> sigma(half * half, cplx{0, 0});
  for (std::uint64_t r = 0; r < dim_; ++r) {
    const std::uint64_t rr = remove_bit(r, q);
    const cplx* row = rho_.data() + r * dim_;
    for (std::uint64_t c = 0; c < dim_; ++c) {
      if ((c & bit) == (r & bit)) {
        sigma[rr * half + remove_bit(c, q)] += row[c];
      }
    }
  }
  // rho = (1-p) rho + (p/2) I_q (x) sigma
  const double keep = 1.0 - p;
  for (auto& v : rho_) v *= keep;
  const double w = 0.5 * p;
  for (std::uint64_t r = 0; r < dim_; ++r) {
    const std::uint64_t rr = remove_bit(r, q);
    cplx* row = rho_.data() + r * dim_;
    for (std::uint64_t c = 0; c < dim_; ++c) {
      if ((c & bit) == (r & bit)) {
        row[c] += w * sigma[rr * half + remove_bit(c, q)];
      }
    }
  }
}

void DensityMatrix::depolarize2(int q0, int q1, double p) {
  if (p == 0.0) return;
  const std::size_t quarter = dim_ / 4;
  const std::uint64_t b0 = std::uint64_t{1} << q0;
  const std::uint64_t b1 = std::uint64_t{1} << q1;
  const int lo = std::min(q0, q1);
  const int hi = std::max(q0, q1);
  auto squeeze = [&](std::uint64_t i) {
    return remove_bit(remove_bit(i, hi), lo);
  };
  std::vector<cplx> sigma(quarter * quarter, cplx{0, 0});
  for (std::uint64_t r = 0; r < dim_; ++r) {
    const std::uint64_t rr = squeeze(r);
    const cplx* row = rho_.data() + r * dim_;
    for (std::uint64_t c = 0; c < dim_; ++c) {
      if ((c & b0) == (r & b0) && (c & b1) == (r & b1)) {
        sigma[rr * quarter + squeeze(c)] += row[c];
      }
    }
  }
  const double keep = 1.0 - p;
  for (auto& v : rho_) v *= keep;
  const double w = 0.25 * p;
  for (std::uint64_t r = 0; r < dim_; ++r) {
    const std::uint64_t rr = squeeze(r);
    cplx* row = rho_.data() + r * dim_;
    for (std::uint64_t c = 0; c < dim_; ++c) {
      if ((c & b0) == (r & b0) && (c & b1) == (r & b1)) {
        row[c] += w * sigma[rr * quarter + squeeze(c)];
      }
    }
  }
}

DensityMatrix DensityMatrix::partial_trace_keep(const std::vector<int>& keep) const {
  DensityMatrix out(static_cast<int>(keep.size()));
  auto extract = [&](std::uint64_t i) {
    std::uint64_t v = 0;
    for (std::size_t k = 0; k < keep.size(); ++k) {
      if ((i >> keep[k]) & 1) v |= std::uint64_t{1} << k;
    }
    return v;
  };
  std::uint64_t keep_mask = 0;
  for (int q : keep) keep_mask |= std::uint64_t{1} << q;
  const std::uint64_t trace_mask = (dim_ - 1) & ~keep_mask;
  for (std::uint64_t r = 0; r < dim_; ++r) {
    for (std::uint64_t c = 0; c < dim_; ++c) {
      if ((r & trace_mask) == (c & trace_mask)) {
        out.rho_[extract(r) * out.dim_ + extract(c)] += rho_[r * dim_ + c];
      }
    }
  }
  return out;
}

namespace {

void check_runnable(const Circuit& c, const Bitstring& initial, int max_width) {
  if (!c.is_bound()) throw std::invalid_argument("circuit has unbound parameters");
  if (c.width > max_width) {
    throw std::invalid_argument("circuit width exceeds the simulator cap");
  }
  if (initial.width() != c.width) {
    throw std::invalid_argument("initial state width does not match circuit");
  }
}

}  // namespace

Statevector run_statevector(const Circuit& c, const Bitstring& initial,
                            int max_width) {
  check_runnable(c, initial, max_width);
  Statevector state(initial);
  for (const auto& g : c.gates) state.apply(g);
  return state;
}

DensityMatrix run_noisy(const Circuit& c, const Bitstring& initial,
                        const NoiseParams& noise, int max_width) {
  check_runnable(c, initial, max_width);
  DensityMatrix rho(initial);
  for (const auto& g : c.gates) {
    rho.apply(g);
    if (g.kind == GateKind::Cnot) {
      rho.depolarize2(g.q0, g.q1, noise.p2);
    } else {
      rho.depolarize1(g.q0, noise.p1);
    }
  }
  return rho;
}

Statevector run_noisy_trajectory(const Circuit& c, const Bitstring& initial,
                                 const NoiseParams& noise, Rng& rng,
                                 int max_width) {
  check_runnable(c, initial, max_width);
  Statevector state(initial);
  for (const auto& g : c.gates) {
    state.apply(g);
    if (g.kind == GateKind::Cnot) {
      if (noise.p2 > 0 && rng.uniform() < noise.p2) {
        const std::uint64_t pick = rng.integer(16);
        std::uint64_t x = 0, z = 0;
        if (pick & 1) x |= std::uint64_t{1} << g.q0;
        if (pick & 2) z |= std::uint64_t{1} << g.q0;
        if (pick & 4) x |= std::uint64_t{1} << g.q1;
        if (pick & 8) z |= std::uint64_t{1} << g.q1;
        state.apply_pauli(PauliString(x, z, c.width));
      }
    } else if (noise.p1 > 0 && rng.uniform() < noise.p1) {
      const std::uint64_t pick = rng.integer(4);
      const std::uint64_t x = (pick & 1) ? std::uint64_t{1} << g.q0 : 0;
      const std::uint64_t z = (pick & 2) ? std::uint64_t{1} << g.q0 : 0;
      state.apply_pauli(PauliString(x, z, c.width));
    }
  }
  return state;
}

namespace {

cplx term_expectation(const Statevector& state, const PauliString& p) {
  const auto& a = state.amplitudes();
  cplx acc{0, 0};
  const std::size_t dim = a.size();
  for (std::uint64_t j = 0; j < dim; ++j) {
    acc += std::conj(a[j ^ p.x]) * p.basis_phase(j) * a[j];
  }
  return acc;
}

cplx term_expectation(const DensityMatrix& state, const PauliString& p) {
  cplx acc{0, 0};
  const std::size_t dim = state.dim();
  for (std::uint64_t j = 0; j < dim; ++j) {
    acc += state.entry(j, j ^ p.x) * p.basis_phase(j);
  }
  return acc;
}

template <class State>
cplx expval_complex_impl(const State& state, const PauliSum& op) {
  if (op.width() != state.width()) throw std::invalid_argument("width mismatch");
  cplx acc{0, 0};
  for (const auto& [p, c] : op.terms()) {
    acc += c * term_expectation(state, p);
  }
  return acc;
}

template <class State>
double expval_impl(const State& state, const PauliSum& obs) {
  if (!obs.is_hermitian()) {
    throw std::invalid_argument("observable must be hermitian");
  }
  return expval_complex_impl(state, obs).real();
}

template <class State>
double sample_energy_impl(const State& state, const PauliSum& obs, long shots,
                          Rng& rng) {
  if (shots < 1) throw std::invalid_argument("shots must be >= 1");
  if (!obs.is_hermitian()) {
    throw std::invalid_argument("observable must be hermitian");
  }
  if (obs.width() != state.width()) throw std::invalid_argument("width mismatch");
  double estimate = 0.0;
  for (const auto& [p, c] : obs.terms()) {
    if (p.is_identity()) {
      estimate += c.real();
      continue;
    }
    // term eigenvalues are +-1; measuring in the term eigenbasis is a
    // Bernoulli trial with P(+1) = (1 + <P>)/2
    const double mean = term_expectation(state, p).real();
    const double pe = std::clamp(0.5 * (1.0 + mean), 0.0, 1.0);
    const long k = rng.binomial(shots, pe);
    estimate += c.real() * (2.0 * static_cast<double>(k) / shots - 1.0);
  }
  return estimate;
}

}  // namespace

double expval(const Statevector& state, const PauliSum& obs) {
  return expval_impl(state, obs);
}

double expval(const DensityMatrix& state, const PauliSum& obs) {
  return expval_impl(state, obs);
}

cplx expval_complex(const Statevector& state, const PauliSum& op) {
  return expval_complex_impl(state, op);
}

cplx expval_complex(const DensityMatrix& state, const PauliSum& op) {
  return expval_complex_impl(state, op);
}

double sample_energy(const Statevector& state, const PauliSum& obs, long shots,
                     Rng& rng) {
  return sample_energy_impl(state, obs, shots, rng);
}

double sample_energy(const DensityMatrix& state, const PauliSum& obs,
                     long shots, Rng& rng) {
  return sample_energy_impl(state, obs, shots, rng);
}

}  // namespace bosonenc
