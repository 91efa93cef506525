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

#include <string>
#include <vector>

#include "bosonenc/modal.hpp"

namespace bosonenc {

enum class EncodingFamily { Direct, StandardBinary, GrayCode, Compact };

/// Which boson-to-qubit code a codebook uses. The compact encoding carries a
/// Hamming-weight threshold: only codewords with weight <= threshold are
/// admitted, extra qubits are added until enough of them exist.
struct EncodingKind {
  EncodingFamily family = EncodingFamily::StandardBinary;
  int threshold = 2;  // Compact only

  static EncodingKind direct() { return {EncodingFamily::Direct, 0}; }
  static EncodingKind standard_binary() {
    return {EncodingFamily::StandardBinary, 0};
  }
  static EncodingKind gray_code() { return {EncodingFamily::GrayCode, 0}; }
  static EncodingKind compact(int threshold = 2);

  std::string name() const;

  friend bool operator==(const EncodingKind& a, const EncodingKind& b) = default;
};

/// Parse one of "dm", "sb", "gc", "cea" (threshold applied separately).
EncodingKind encoding_from_string(const std::string& s, int cea_threshold = 2);

/// Per-mode assignment of modal indices to qubit bitstrings.
class Codebook {
 public:
  Codebook(SystemSpec system, EncodingKind kind, bool gsep,
           std::vector<std::vector<Bitstring>> codewords);

  const SystemSpec& system() const { return system_; }
  const EncodingKind& kind() const { return kind_; }
  bool gsep() const { return gsep_; }

  int modes() const { return system_.modes(); }
  int qubits_per_mode(int l) const;
  int total_qubits() const { return total_qubits_; }

  /// First global qubit of mode l's register; registers are concatenated in
  /// mode order.
  int register_offset(int l) const;

  const Bitstring& codeword(int l, int modal) const;
  const std::vector<Bitstring>& mode_codewords(int l) const;

  /// dh between the codewords of modals r and s in mode l.
  int excitation_hamming(int l, int r, int s) const;

  /// Global-register bitstring of a configuration (codewords concatenated).
  Bitstring encode(const Configuration& c) const;

  std::string to_json() const;

 private:
  SystemSpec system_;
  EncodingKind kind_;
  bool gsep_;
  std::vector<std::vector<Bitstring>> codewords_;
  std::vector<int> offsets_;
  int total_qubits_ = 0;
};

/// Build the per-mode codebooks for `kind`.
///
/// Direct: one-hot, N_l qubits per mode. Standard binary: codeword k is the
/// binary decomposition of k on ceil(log2 N_l) qubits. Gray: the reflected
/// code k ^ (k >> 1). Compact(t): the smallest width Q with
/// sum_{w<=t} C(Q, w) >= N_l, codewords enumerated by ascending weight and
/// ascending value within a weight class.
///
/// With gsep, modal index 0 must map to the all-zero codeword; this holds by
/// construction for every compact family, and is rejected for the direct
/// mapping (a one-hot code cannot contain the zero word).
Codebook build_codebook(const SystemSpec& system, const EncodingKind& kind,
                        bool gsep = true);

/// Smallest Q with sum_{w=0..threshold} C(Q, w) >= n.
int compact_register_width(int n, int threshold);

/// Reflected Gray code word of k.
std::uint64_t gray_word(std::uint64_t k);

/// One row of the encoding comparison: total Hamming distance accumulated by
/// every UCCSD excitation operator, and the same total relative to the
/// direct mapping.
struct RhdRow {
  EncodingKind kind;
  int total_hd = 0;
  double relative_hd = 0.0;
};

/// Sum of excitation-operator Hamming distances over all UCCSD singles and
/// doubles out of the all-zero reference (doubles add the two per-mode
/// distances). The direct-mapping total is 2*#singles + 4*#doubles.
int total_excitation_hamming(const Codebook& cb);

std::vector<RhdRow> rhd_report(const SystemSpec& system,
                               const std::vector<EncodingKind>& kinds);

}  // namespace bosonenc
