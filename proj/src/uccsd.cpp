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

#include "bosonenc/uccsd.hpp"

#include <algorithm>
#include <bit>
#include <numbers>
#include <stdexcept>
#include <tuple>
#include <utility>

namespace bosonenc {

ClusterOperator build_uccsd(const SystemSpec& system,
                            const Configuration& reference) {
  ClusterOperator op{system, reference, {}, 0};
  const int L = system.modes();
  for (int l = 0; l < L; ++l) {
    for (int r = 0; r < system.modal_dim(l); ++r) {
      if (r == reference.occupied(l)) continue;
      op.excitations.push_back({l, r, -1, -1});
    }
  }
  op.num_singles = op.excitations.size();
  for (int l = 0; l < L; ++l) {
    for (int m = l + 1; m < L; ++m) {
      for (int r = 0; r < system.modal_dim(l); ++r) {
        if (r == reference.occupied(l)) continue;
        for (int p = 0; p < system.modal_dim(m); ++p) {
          if (p == reference.occupied(m)) continue;
          op.excitations.push_back({l, r, m, p});
        }
      }
    }
  }
  return op;
}

namespace {

// bare per-mode transition: sigma+/sigma- on raised/lowered bits, (I-Z)/2 on
// shared ones, identity on shared zeros
PauliSum bare_mode_transition(const Codebook& cb, int l, int r, int s) {
  const Bitstring& wr = cb.codeword(l, r);
  const Bitstring& ws = cb.codeword(l, s);
  const int offset = cb.register_offset(l);
  const int width = cb.total_qubits();

  PauliSum acc = PauliSum::identity(width);
  for (int i = 0; i < wr.width(); ++i) {
    const bool rb = wr.bit(i);
    const bool sb = ws.bit(i);
    if (!rb && !sb) continue;
    const int q = offset + i;
    PauliSum factor(width);
    const PauliString xq(std::uint64_t{1} << q, 0, width);
    const PauliString yq(std::uint64_t{1} << q, std::uint64_t{1} << q, width);
    const PauliString zq(0, std::uint64_t{1} << q, width);
    if (rb && !sb) {
      factor.add(xq, 0.5);
      factor.add(yq, cplx{0, -0.5});
    } else if (!rb && sb) {
      factor.add(xq, 0.5);
      factor.add(yq, cplx{0, 0.5});
    } else {
      factor.add(PauliString::identity(width), 0.5);
      factor.add(zq, -0.5);
    }
    acc = multiply(acc, factor);
  }
  return acc;
}

}  // namespace

PauliSum bare_excitation(const Codebook& cb, const ClusterExcitation& ex,
                         const Configuration& reference) {
  PauliSum out =
      bare_mode_transition(cb, ex.mode1, ex.target1, reference.occupied(ex.mode1));
  if (ex.is_double()) {
    out = multiply(out, bare_mode_transition(cb, ex.mode2, ex.target2,
                                             reference.occupied(ex.mode2)));
  }
  return out;
}

std::vector<GeneratorBlock> cluster_to_pauli(const ClusterOperator& t,
                                             const Codebook& cb) {
  if (cb.system().modal_dims != t.system.modal_dims) {
    throw std::invalid_argument("codebook system does not match cluster operator");
  }
  std::vector<GeneratorBlock> blocks;
  blocks.reserve(t.excitations.size());
  for (std::size_t k = 0; k < t.excitations.size(); ++k) {
    PauliSum a = bare_excitation(cb, t.excitations[k], t.reference);
    blocks.push_back({static_cast<int>(k), anti_hermitian_part(a)});
  }
  // deterministic synthesis order: singles before doubles, modes ascending,
  // then codewords ascending. Keying on codewords (not modal labels) makes
  // codebooks with equal codeword sets produce identical circuits.
  std::vector<std::size_t> order(blocks.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  auto key = [&](std::size_t i) {
    const auto& ex = t.excitations[i];
    const std::uint64_t w1 = cb.codeword(ex.mode1, ex.target1).value();
    const std::uint64_t w2 =
        ex.is_double() ? cb.codeword(ex.mode2, ex.target2).value() : 0;
    return std::make_tuple(ex.is_double(), ex.mode1, ex.mode2, w1, w2);
  };
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return key(a) < key(b); });
  std::vector<GeneratorBlock> sorted;
  sorted.reserve(blocks.size());
  for (std::size_t i : order) sorted.push_back(std::move(blocks[i]));
  return sorted;
}

PauliSum cluster_generator(const ClusterOperator& t, const Codebook& cb,
                           std::span<const double> amps) {
  if (amps.size() != t.excitations.size()) {
    throw std::invalid_argument("amplitude count must match excitation count");
  }
  PauliSum g(cb.total_qubits());
  auto blocks = cluster_to_pauli(t, cb);
  for (const auto& b : blocks) {
    g += amps[b.param] * b.op;
  }
  return g;
}

namespace {

void append_pauli_rotation(Circuit& circuit, const PauliString& p, double g_unit,
                           int param, int steps) {
  // block implements exp(i * theta * g_unit * P) per Trotter step, where
  // theta is the bound amplitude (or 1 for fixed generators, param < 0)
  std::vector<int> support;
  std::vector<char> basis;  // 'x', 'y', 'z'
  for (int q = 0; q < p.width; ++q) {
    const bool bx = (p.x >> q) & 1;
    const bool bz = (p.z >> q) & 1;
    if (!bx && !bz) continue;
    support.push_back(q);
    basis.push_back(bx ? (bz ? 'y' : 'x') : 'z');
  }
  if (support.empty()) return;  // identity: a global phase, no gates

  const double half_pi = std::numbers::pi / 2;
  for (std::size_t i = 0; i < support.size(); ++i) {
    if (basis[i] == 'x') {
      circuit.gates.push_back({GateKind::H, support[i]});
    } else if (basis[i] == 'y') {
      circuit.gates.push_back({GateKind::Rx, support[i], -1, half_pi});
    }
  }
  for (std::size_t i = 0; i + 1 < support.size(); ++i) {
    circuit.gates.push_back({GateKind::Cnot, support[i], support[i + 1]});
  }
  const double angle_scale = -2.0 * g_unit / steps;
  Gate rz{GateKind::Rz, support.back()};
  if (param < 0) {
    rz.angle = angle_scale;
  } else {
    rz.param = param;
    rz.scale = angle_scale;
  }
  circuit.gates.push_back(rz);
  for (std::size_t i = support.size() - 1; i-- > 0;) {
    circuit.gates.push_back({GateKind::Cnot, support[i], support[i + 1]});
  }
  for (std::size_t i = support.size(); i-- > 0;) {
    if (basis[i] == 'x') {
      circuit.gates.push_back({GateKind::H, support[i]});
    } else if (basis[i] == 'y') {
      circuit.gates.push_back({GateKind::Rx, support[i], -1, -half_pi});
    }
  }
}

void check_anti_hermitian(const PauliSum& op) {
  for (const auto& [p, c] : op.terms()) {
    if (std::abs(c.real()) > 1e-10) {
      throw std::invalid_argument(
          "generator must be anti-hermitian (purely imaginary coefficients)");
    }
  }
}

std::uint64_t reverse_bits(std::uint64_t v, int width) {
  std::uint64_t r = 0;
  for (int i = 0; i < width; ++i) {
    r = (r << 1) | ((v >> i) & 1);
  }
  return r;
}

// Within a block, order terms so that consecutive ones differ on the highest
// support qubits; the shared low-qubit basis layers and staircase rungs then
// cancel at the junctions.
std::vector<std::pair<PauliString, cplx>> block_terms(const PauliSum& op) {
  std::vector<std::pair<PauliString, cplx>> terms(op.terms().begin(),
                                                  op.terms().end());
  std::sort(terms.begin(), terms.end(), [&](const auto& a, const auto& b) {
    const auto ka = std::make_pair(reverse_bits(a.first.z, a.first.width),
                                   reverse_bits(a.first.x, a.first.width));
    const auto kb = std::make_pair(reverse_bits(b.first.z, b.first.width),
                                   reverse_bits(b.first.x, b.first.width));
    return ka < kb;
  });
  return terms;
}

}  // namespace

Circuit trotterize(const std::vector<GeneratorBlock>& blocks, int width,
                   int steps) {
  if (steps < 1) throw std::invalid_argument("steps must be >= 1");
  Circuit circuit;
  circuit.width = width;
  for (const auto& b : blocks) {
    check_anti_hermitian(b.op);
    circuit.num_params = std::max(circuit.num_params, b.param + 1);
  }
  for (int step = 0; step < steps; ++step) {
    for (const auto& b : blocks) {
      for (const auto& [p, c] : block_terms(b.op)) {
        append_pauli_rotation(circuit, p, c.imag(), b.param, steps);
      }
    }
  }
  return circuit;
}

Circuit trotterize(const PauliSum& generator, int steps) {
  if (steps < 1) throw std::invalid_argument("steps must be >= 1");
  check_anti_hermitian(generator);
  Circuit circuit;
  circuit.width = generator.width();
  for (int step = 0; step < steps; ++step) {
    for (const auto& [p, c] : block_terms(generator)) {
      append_pauli_rotation(circuit, p, c.imag(), -1, steps);
    }
  }
  return circuit;
}

}  // namespace bosonenc
