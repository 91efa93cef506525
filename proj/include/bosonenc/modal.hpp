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
#include <string>
#include <vector>

namespace bosonenc {

/// Fixed-width register of bits. Bit i carries the coefficient of 2^i, so
/// bit 0 is the least significant. The textual form prints bit 0 first
/// (most significant bit last).
class Bitstring {
 public:
  Bitstring() = default;
  Bitstring(std::uint64_t value, int width);

  static Bitstring from_bits(const std::vector<int>& bits);

  int width() const { return width_; }
  std::uint64_t value() const { return value_; }
  bool bit(int i) const;
  int weight() const;

  std::vector<int> bits() const;
  std::string str() const;

  friend bool operator==(const Bitstring& a, const Bitstring& b) = default;

 private:
  std::uint64_t value_ = 0;
  int width_ = 0;
};

/// Little-endian binary decomposition of `index`, zero-padded to `width`.
Bitstring binary_decompose(std::uint64_t index, int width);

/// Number of positions where the two strings differ. Widths must match.
int hamming_distance(const Bitstring& a, const Bitstring& b);

/// Number of set bits.
int hamming_weight(const Bitstring& a);

/// Mode structure of a bosonic system: L modes, N_l modals in mode l.
struct SystemSpec {
  std::vector<int> modal_dims;

  explicit SystemSpec(std::vector<int> dims);
  SystemSpec() = default;

  int modes() const { return static_cast<int>(modal_dims.size()); }
  int modal_dim(int l) const;

  /// Dimension of the configuration space, prod_l N_l.
  std::size_t config_dim() const;
};

/// One occupied modal per mode (the mode-conserving manifold).
class Configuration {
 public:
  Configuration(const SystemSpec& system, std::vector<int> occupied);

  /// All-zero reference configuration.
  static Configuration reference(const SystemSpec& system);

  int occupied(int l) const;
  int modes() const { return static_cast<int>(occupied_.size()); }
  const std::vector<int>& indices() const { return occupied_; }

  friend bool operator==(const Configuration& a,
                         const Configuration& b) = default;

 private:
  std::vector<int> occupied_;
};

}  // namespace bosonenc
