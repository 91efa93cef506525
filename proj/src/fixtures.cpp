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

#include "bosonenc/fixtures.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace bosonenc::fixtures {

namespace {

// Four modes shaped like a linear triatomic: symmetric stretch, a degenerate
// bend pair (modes 1 and 2 carry identical parameters and even powers only,
// so the first two excited states stay exactly degenerate), and an
// antisymmetric stretch.
const std::string kCo2 = R"({
  "omega": [1333.0, 667.0, 667.0, 2349.0],
  "v0": 0.0,
  "cubic": [
    {"modes": [0, 0, 0], "coeff": -15.0},
    {"modes": [0, 1, 1], "coeff": -25.0},
    {"modes": [0, 2, 2], "coeff": -25.0},
    {"modes": [0, 3, 3], "coeff": -30.0}
  ],
  "quartic": [
    {"modes": [0, 0, 0, 0], "coeff": 4.0},
    {"modes": [1, 1, 1, 1], "coeff": 3.0},
    {"modes": [2, 2, 2, 2], "coeff": 3.0},
    {"modes": [3, 3, 3, 3], "coeff": 6.0},
    {"modes": [1, 1, 2, 2], "coeff": 8.0},
    {"modes": [0, 0, 1, 1], "coeff": -6.0},
    {"modes": [0, 0, 2, 2], "coeff": -6.0},
    {"modes": [1, 1, 3, 3], "coeff": -10.0},
    {"modes": [2, 2, 3, 3], "coeff": -10.0},
    {"modes": [0, 0, 3, 3], "coeff": -12.0}
  ]
})";

// Two identical anharmonic modes with a symmetric coupling. Every term has
// even power in each mode, so per-mode parity is conserved and the first two
// excited states are exactly degenerate at any modal truncation. With three
// or more modals per mode the quartic terms couple modals 0 and 2, making
// the ground state a genuine superposition.
const std::string kSymmetric2 = R"({
  "omega": [1000.0, 1000.0],
  "v0": 0.0,
  "cubic": [],
  "quartic": [
    {"modes": [0, 0, 0, 0], "coeff": 5.0},
    {"modes": [1, 1, 1, 1], "coeff": 5.0},
    {"modes": [0, 0, 1, 1], "coeff": 12.0}
  ]
})";

}  // namespace

std::vector<std::string> names() { return {"co2", "symmetric2"}; }

const std::string& qff_json(const std::string& name) {
  if (name == "co2") return kCo2;
  if (name == "symmetric2") return kSymmetric2;
  throw std::invalid_argument("unknown fixture '" + name + "'");
}

std::string load_qff(const std::string& name_or_path) {
  for (const auto& n : names()) {
    if (n == name_or_path) return qff_json(n);
  }
  std::ifstream in(name_or_path);
  if (!in) {
    throw std::invalid_argument("cannot open force-field file '" + name_or_path +
                                "' (and it is not a bundled fixture name)");
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace bosonenc::fixtures
