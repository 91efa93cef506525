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

#include "bosonenc/circuit.hpp"

#include <cstdio>
#include <stdexcept>

namespace bosonenc {

double Gate::bound_angle(std::span<const double> amplitudes) const {
  if (param < 0) return angle;
  if (param >= static_cast<int>(amplitudes.size())) {
    throw std::out_of_range("gate parameter index out of range");
  }
  return angle + scale * amplitudes[param];
}

bool Circuit::is_bound() const {
  for (const auto& g : gates) {
    if (!g.is_bound()) return false;
  }
  return true;
}

Circuit Circuit::bind(std::span<const double> amplitudes) const {
  if (static_cast<int>(amplitudes.size()) < num_params) {
    throw std::invalid_argument("not enough amplitudes to bind circuit");
  }
  Circuit out;
  out.width = width;
  out.num_params = 0;
  out.gates.reserve(gates.size());
  for (const auto& g : gates) {
    Gate b = g;
    b.angle = g.bound_angle(amplitudes);
    b.param = -1;
    b.scale = 0.0;
    out.gates.push_back(b);
  }
  return out;
}

GateCounts count_gates(const Circuit& c) {
  GateCounts counts;
  for (const auto& g : c.gates) {
    if (g.kind == GateKind::Cnot) ++counts.cnot;
    else ++counts.one_qubit;
  }
  return counts;
}

std::string circuit_to_text(const Circuit& c) {
  if (!c.is_bound()) {
    throw std::invalid_argument("cannot export an unbound circuit");
  }
  std::string out;
  char buf[64];
  for (const auto& g : c.gates) {
    switch (g.kind) {
      case GateKind::H:
        std::snprintf(buf, sizeof(buf), "H %d\n", g.q0);
        break;
      case GateKind::S:
        std::snprintf(buf, sizeof(buf), "S %d\n", g.q0);
        break;
      case GateKind::Sdg:
        std::snprintf(buf, sizeof(buf), "SDG %d\n", g.q0);
        break;
      case GateKind::Rz:
        std::snprintf(buf, sizeof(buf), "RZ %d,%.17g\n", g.q0, g.angle);
        break;
      case GateKind::Rx:
        std::snprintf(buf, sizeof(buf), "RX %d,%.17g\n", g.q0, g.angle);
        break;
      case GateKind::Cnot:
        std::snprintf(buf, sizeof(buf), "CNOT %d,%d\n", g.q0, g.q1);
        break;
    }
    out += buf;
  }
  return out;
}

}  // namespace bosonenc
