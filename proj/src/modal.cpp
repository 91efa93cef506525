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

#include "bosonenc/modal.hpp"

#include <bit>
#include <stdexcept>

namespace bosonenc {

Bitstring::Bitstring(std::uint64_t value, int width)
    : value_(value), width_(width) {
  if (width < 0 || width > 64) {
    throw std::invalid_argument("Bitstring width must be in [0, 64]");
  }
  if (width < 64 && (value >> width) != 0) {
    throw std::invalid_argument("Bitstring value does not fit in width");
  }
}

Bitstring Bitstring::from_bits(const std::vector<int>& bits) {
  std::uint64_t v = 0;
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] != 0 && bits[i] != 1) {
      throw std::invalid_argument("bits must be 0 or 1");
    }
    if (bits[i]) v |= std::uint64_t{1} << i;
  }
  return Bitstring(v, static_cast<int>(bits.size()));
}

bool Bitstring::bit(int i) const {
  if (i < 0 || i >= width_) throw std::out_of_range("bit index out of range");
  return (value_ >> i) & 1;
}

int Bitstring::weight() const { return std::popcount(value_); }

std::vector<int> Bitstring::bits() const {
  std::vector<int> out(width_);
  for (int i = 0; i < width_; ++i) out[i] = static_cast<int>((value_ >> i) & 1);
  return out;
}

std::string Bitstring::str() const {
  std::string s(width_, '0');
  for (int i = 0; i < width_; ++i) {
    if ((value_ >> i) & 1) s[i] = '1';
  }
  return s;
}

Bitstring binary_decompose(std::uint64_t index, int width) {
  if (width < 1 || width > 64) {
    throw std::invalid_argument("width must be in [1, 64]");
  }
  if (width < 64 && index >= (std::uint64_t{1} << width)) {
    throw std::out_of_range("index out of range for width");
  }
  return Bitstring(index, width);
}

int hamming_distance(const Bitstring& a, const Bitstring& b) {
  if (a.width() != b.width()) {
    throw std::invalid_argument("hamming_distance: width mismatch");
  }
  return std::popcount(a.value() ^ b.value());
}

int hamming_weight(const Bitstring& a) { return a.weight(); }

SystemSpec::SystemSpec(std::vector<int> dims) : modal_dims(std::move(dims)) {
  if (modal_dims.empty()) {
    throw std::invalid_argument("SystemSpec needs at least one mode");
  }
  for (int n : modal_dims) {
    if (n < 2) throw std::invalid_argument("every modal dimension must be >= 2");
  }
}

int SystemSpec::modal_dim(int l) const {
  if (l < 0 || l >= modes()) throw std::out_of_range("mode index out of range");
  return modal_dims[l];
}

std::size_t SystemSpec::config_dim() const {
  std::size_t d = 1;
  for (int n : modal_dims) d *= static_cast<std::size_t>(n);
  return d;
}

Configuration::Configuration(const SystemSpec& system, std::vector<int> occupied)
    : occupied_(std::move(occupied)) {
  if (static_cast<int>(occupied_.size()) != system.modes()) {
    throw std::invalid_argument("Configuration length must equal mode count");
  }
  for (int l = 0; l < system.modes(); ++l) {
    if (occupied_[l] < 0 || occupied_[l] >= system.modal_dim(l)) {
      throw std::out_of_range("occupied modal index out of range");
    }
  }
}

Configuration Configuration::reference(const SystemSpec& system) {
  return Configuration(system, std::vector<int>(system.modes(), 0));
}

int Configuration::occupied(int l) const {
  if (l < 0 || l >= modes()) throw std::out_of_range("mode index out of range");
  return occupied_[l];
}

}  // namespace bosonenc
