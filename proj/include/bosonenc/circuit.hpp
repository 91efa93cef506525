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

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace bosonenc {

enum class GateKind : std::uint8_t { H, S, Sdg, Rz, Rx, Cnot };

/// One gate. For CNOT, q0 is the control and q1 the target. Rotation angles
/// may bind a cluster amplitude: the effective angle is
/// angle + scale * amplitude[param] (param < 0 means fixed).
struct Gate {
  GateKind kind;
  int q0 = 0;
  int q1 = -1;
  double angle = 0.0;
  int param = -1;
  double scale = 0.0;

  bool is_rotation() const { return kind == GateKind::Rz || kind == GateKind::Rx; }
  bool is_bound() const { return param < 0; }
  double bound_angle(std::span<const double> amplitudes) const;
};

struct GateCounts {
  long cnot = 0;
  long one_qubit = 0;
};

struct Circuit {
  int width = 0;
  std::vector<Gate> gates;
  int num_params = 0;

  bool is_bound() const;
  /// Resolve every parametric angle against the amplitude vector.
  Circuit bind(std::span<const double> amplitudes) const;
};

GateCounts count_gates(const Circuit& c);

/// Plain-text export, one `GATE q[,q2][,angle]` line per gate. The circuit
/// must be bound.
std::string circuit_to_text(const Circuit& c);

/// Fixed-point peephole pass: cancels adjacent self-inverse pairs (CNOT-CNOT,
/// H-H, S-Sdg), merges adjacent rotations of the same kind on the same qubit,
/// and commutes gates past each other (Rz through its CNOT control, Rx through
/// its CNOT target, disjoint gates) to expose more cancellations. Preserves
/// the exact circuit unitary, including global phase.
Circuit peephole_optimize(const Circuit& c);

}  // namespace bosonenc
