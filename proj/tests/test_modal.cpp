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

#include <doctest.h>

#include <stdexcept>

#include <random>

#include "bosonenc/modal.hpp"

using namespace bosonenc;

TEST_CASE("binary decomposition is little-endian and zero-padded") {
  CHECK(binary_decompose(0, 3).bits() == std::vector<int>{0, 0, 0});
  CHECK(binary_decompose(5, 3).bits() == std::vector<int>{1, 0, 1});
  CHECK(binary_decompose(7, 3).bits() == std::vector<int>{1, 1, 1});
  CHECK(binary_decompose(1, 4).bits() == std::vector<int>{1, 0, 0, 0});
  CHECK_THROWS_AS(binary_decompose(8, 3), std::out_of_range);
}

TEST_CASE("binary decomposition round-trips over the full width") {
  for (int width = 1; width <= 6; ++width) {
    std::vector<std::uint64_t> seen;
    for (std::uint64_t v = 0; v < (std::uint64_t{1} << width); ++v) {
      const Bitstring b = binary_decompose(v, width);
      CHECK(b.width() == width);
      CHECK(b.value() == v);
      CHECK(Bitstring::from_bits(b.bits()).value() == v);
      seen.push_back(b.value());
    }
    std::sort(seen.begin(), seen.end());
    CHECK(std::adjacent_find(seen.begin(), seen.end()) == seen.end());
  }
}

TEST_CASE("hamming distance counts differing positions") {
  const Bitstring a = Bitstring::from_bits({0, 0, 1});
  const Bitstring b = Bitstring::from_bits({1, 0, 1});
  CHECK(hamming_distance(a, b) == 1);
  CHECK(hamming_distance(b, a) == 1);
  CHECK(hamming_distance(a, a) == 0);
  CHECK(hamming_distance(binary_decompose(0, 3), binary_decompose(7, 3)) == 3);
  CHECK_THROWS_AS(hamming_distance(binary_decompose(0, 3), binary_decompose(0, 4)),
                  std::invalid_argument);
}

TEST_CASE("hamming weight") {
  CHECK(hamming_weight(binary_decompose(0, 3)) == 0);
  CHECK(hamming_weight(Bitstring::from_bits({1, 0, 1})) == 2);
  CHECK(hamming_weight(binary_decompose(7, 3)) == 3);
}

TEST_CASE("hamming distance properties: triangle and xor-weight") {
  std::mt19937_64 gen(12345);
  for (int trial = 0; trial < 200; ++trial) {
    const int width = 1 + static_cast<int>(gen() % 12);
    const std::uint64_t mask = (std::uint64_t{1} << width) - 1;
    const Bitstring a(gen() & mask, width);
    const Bitstring b(gen() & mask, width);
    const Bitstring c(gen() & mask, width);
    const int dab = hamming_distance(a, b);
    CHECK(dab == hamming_weight(Bitstring(a.value() ^ b.value(), width)));
    CHECK(dab <= hamming_distance(a, c) + hamming_distance(c, b));
    CHECK((dab == 0) == (a == b));
  }
}

TEST_CASE("bitstring text form prints bit 0 first") {
  CHECK(binary_decompose(1, 3).str() == "100");
  CHECK(binary_decompose(5, 3).str() == "101");
  CHECK(binary_decompose(4, 3).str() == "001");
}

TEST_CASE("system spec validation") {
  CHECK_THROWS_AS(SystemSpec(std::vector<int>{}), std::invalid_argument);
  CHECK_THROWS_AS(SystemSpec({4, 1}), std::invalid_argument);
  const SystemSpec sys({3, 4});
  CHECK(sys.modes() == 2);
  CHECK(sys.config_dim() == 12);
}

TEST_CASE("configurations hold one occupied modal per mode") {
  const SystemSpec sys({2, 3});
  const Configuration ref = Configuration::reference(sys);
  CHECK(ref.occupied(0) == 0);
  CHECK(ref.occupied(1) == 0);
  CHECK_THROWS_AS(Configuration(sys, {0, 3}), std::out_of_range);
  CHECK_THROWS_AS(Configuration(sys, {0}), std::invalid_argument);
  const Configuration c(sys, {1, 2});
  CHECK(c.occupied(1) == 2);
}
