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

#include <cmath>
#include <numbers>
#include <vector>

#include "bosonenc/circuit.hpp"

namespace bosonenc {

namespace {

constexpr int kLookbackWindow = 256;
constexpr int kMaxPasses = 64;

bool touches(const Gate& g, int q) {
  return g.q0 == q || (g.kind == GateKind::Cnot && g.q1 == q);
}

bool disjoint(const Gate& a, const Gate& b) {
  if (touches(b, a.q0)) return false;
  if (a.kind == GateKind::Cnot && touches(b, a.q1)) return false;
  return true;
}

bool is_diagonal(GateKind k) {
  return k == GateKind::Rz || k == GateKind::S || k == GateKind::Sdg;
}

// Exact commutation rules for gates sharing at least one qubit.
bool commutes(const Gate& a, const Gate& b) {
  if (a.kind == GateKind::Cnot && b.kind == GateKind::Cnot) {
    // shared control or shared target is fine; control-on-target is not
    return a.q0 != b.q1 && b.q0 != a.q1;
  }
  if (a.kind == GateKind::Cnot || b.kind == GateKind::Cnot) {
    const Gate& cx = a.kind == GateKind::Cnot ? a : b;
    const Gate& sg = a.kind == GateKind::Cnot ? b : a;
    if (sg.q0 == cx.q0) return is_diagonal(sg.kind);
    if (sg.q0 == cx.q1) return sg.kind == GateKind::Rx;
    return true;
  }
  // two one-qubit gates on the same qubit
  if (is_diagonal(a.kind) && is_diagonal(b.kind)) return true;
  if (a.kind == GateKind::Rx && b.kind == GateKind::Rx) return true;
  return false;
}

enum class PairAction { None, Cancel, Merge };

PairAction pair_action(const Gate& a, const Gate& b) {
  if ((a.kind == GateKind::S && b.kind == GateKind::Sdg) ||
      (a.kind == GateKind::Sdg && b.kind == GateKind::S)) {
    return a.q0 == b.q0 ? PairAction::Cancel : PairAction::None;
  }
  if (a.kind != b.kind) return PairAction::None;
  switch (a.kind) {
    case GateKind::Cnot:
      return (a.q0 == b.q0 && a.q1 == b.q1) ? PairAction::Cancel
                                            : PairAction::None;
    case GateKind::H:
      return a.q0 == b.q0 ? PairAction::Cancel : PairAction::None;
    case GateKind::Rz:
    case GateKind::Rx:
      if (a.q0 != b.q0) return PairAction::None;
      if (a.param < 0 || b.param < 0 || a.param == b.param) {
        return PairAction::Merge;
      }
      return PairAction::None;
    default:
      return PairAction::None;
  }
}

bool is_identity_rotation(const Gate& g) {
  if (g.param >= 0) return false;
  // Rz(4*pi*k) and Rx(4*pi*k) are the identity exactly (no phase)
  return std::abs(std::remainder(g.angle, 4.0 * std::numbers::pi)) < 1e-12;
}

}  // namespace

Circuit peephole_optimize(const Circuit& c) {
  std::vector<Gate> gates = c.gates;
  std::vector<char> dead;

  bool changed = true;
  for (int pass = 0; pass < kMaxPasses && changed; ++pass) {
    changed = false;
    std::vector<Gate> out;
    out.reserve(gates.size());
    dead.assign(gates.size(), 0);
    std::size_t live = 0;

    for (const Gate& g : gates) {
      bool consumed = false;
      int steps = 0;
      for (int j = static_cast<int>(out.size()) - 1; j >= 0 && steps < kLookbackWindow;
           --j) {
        if (dead[j]) continue;
        Gate& h = out[j];
        if (disjoint(h, g)) {
          ++steps;
          continue;
        }
        const PairAction action = pair_action(h, g);
        if (action == PairAction::Cancel) {
          dead[j] = 1;
          --live;
          consumed = true;
          changed = true;
          break;
        }
        if (action == PairAction::Merge) {
          h.angle += g.angle;
          if (h.param < 0) {
            h.param = g.param;
            h.scale = g.scale;
          } else if (g.param == h.param) {
            h.scale += g.scale;
          }
          if (h.param < 0 && is_identity_rotation(h)) {
            dead[j] = 1;
            --live;
          }
          consumed = true;
          changed = true;
          break;
        }
        if (commutes(h, g)) {
          ++steps;
          continue;
        }
        break;
      }
      if (!consumed) {
        if (g.is_rotation() && is_identity_rotation(g)) {
          changed = true;
          continue;
        }
        out.push_back(g);
        ++live;
      }
    }

    gates.clear();
    gates.reserve(live);
    for (std::size_t i = 0; i < out.size(); ++i) {
      if (!dead[i]) gates.push_back(out[i]);
    }
  }

  Circuit result;
  result.width = c.width;
  result.num_params = c.num_params;
  result.gates = std::move(gates);
  return result;
}

}  // namespace bosonenc
