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

#include "bosonenc/encoding.hpp"

#include <algorithm>
#include <bit>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace bosonenc {

EncodingKind EncodingKind::compact(int threshold) {
  if (threshold < 1) {
    throw std::invalid_argument("compact encoding threshold must be >= 1");
  }
  return {EncodingFamily::Compact, threshold};
}

std::string EncodingKind::name() const {
  switch (family) {
    case EncodingFamily::Direct:
      return "dm";
    case EncodingFamily::StandardBinary:
      return "sb";
    case EncodingFamily::GrayCode:
      return "gc";
    case EncodingFamily::Compact:
      return "cea" + std::to_string(threshold);
  }
  return "?";
}

EncodingKind encoding_from_string(const std::string& s, int cea_threshold) {
  if (s == "dm") return EncodingKind::direct();
  if (s == "sb") return EncodingKind::standard_binary();
  if (s == "gc") return EncodingKind::gray_code();
  if (s == "cea") return EncodingKind::compact(cea_threshold);
  throw std::invalid_argument("unknown encoding '" + s + "'");
}

std::uint64_t gray_word(std::uint64_t k) { return k ^ (k >> 1); }

namespace {

int ceil_log2(int n) {
  int q = 0;
  while ((1 << q) < n) ++q;
  return q;
}

}  // namespace

int compact_register_width(int n, int threshold) {
  if (n < 1) throw std::invalid_argument("modal dimension must be >= 1");
  for (int q = 1;; ++q) {
    // sum_{w=0..threshold} C(q, w), capped to avoid overflow
    long long count = 0;
    long long binom = 1;  // C(q, 0)
    for (int w = 0; w <= std::min(threshold, q); ++w) {
      count += binom;
      binom = binom * (q - w) / (w + 1);
      if (count >= n) break;
    }
    if (count >= n) return q;
  }
}

Codebook::Codebook(SystemSpec system, EncodingKind kind, bool gsep,
                   std::vector<std::vector<Bitstring>> codewords)
    : system_(std::move(system)),
      kind_(kind),
      gsep_(gsep),
      codewords_(std::move(codewords)) {
  if (static_cast<int>(codewords_.size()) != system_.modes()) {
    throw std::invalid_argument("codeword table must cover every mode");
  }
  offsets_.resize(system_.modes());
  for (int l = 0; l < system_.modes(); ++l) {
    const auto& words = codewords_[l];
    if (static_cast<int>(words.size()) != system_.modal_dim(l)) {
      throw std::invalid_argument("mode needs one codeword per modal");
    }
    for (std::size_t a = 0; a < words.size(); ++a) {
      if (words[a].width() != words[0].width()) {
        throw std::invalid_argument("codeword widths must agree within a mode");
      }
      for (std::size_t b = a + 1; b < words.size(); ++b) {
        if (words[a] == words[b]) {
          throw std::invalid_argument("codewords must be distinct within a mode");
        }
      }
    }
    if (gsep_ && words[0].value() != 0) {
      throw std::invalid_argument(
          "gsep codebook must map modal 0 to the all-zero codeword");
    }
    offsets_[l] = total_qubits_;
    total_qubits_ += words[0].width();
  }
}

int Codebook::qubits_per_mode(int l) const {
  if (l < 0 || l >= modes()) throw std::out_of_range("mode index out of range");
  return codewords_[l][0].width();
}

int Codebook::register_offset(int l) const {
  if (l < 0 || l >= modes()) throw std::out_of_range("mode index out of range");
  return offsets_[l];
}

const Bitstring& Codebook::codeword(int l, int modal) const {
  if (l < 0 || l >= modes()) throw std::out_of_range("mode index out of range");
  if (modal < 0 || modal >= system_.modal_dim(l)) {
    throw std::out_of_range("modal index out of range");
  }
  return codewords_[l][modal];
}

const std::vector<Bitstring>& Codebook::mode_codewords(int l) const {
  if (l < 0 || l >= modes()) throw std::out_of_range("mode index out of range");
  return codewords_[l];
}

int Codebook::excitation_hamming(int l, int r, int s) const {
  return hamming_distance(codeword(l, r), codeword(l, s));
}

Bitstring Codebook::encode(const Configuration& c) const {
  std::uint64_t v = 0;
  for (int l = 0; l < modes(); ++l) {
    v |= codeword(l, c.occupied(l)).value() << offsets_[l];
  }
  return Bitstring(v, total_qubits_);
}

std::string Codebook::to_json() const {
  nlohmann::ordered_json j;
  j["encoding"] = kind_.name();
  j["gsep"] = gsep_;
  j["modal_dims"] = system_.modal_dims;
  nlohmann::ordered_json modes = nlohmann::ordered_json::array();
  for (int l = 0; l < this->modes(); ++l) {
    nlohmann::ordered_json m;
    m["qubits"] = qubits_per_mode(l);
    std::vector<std::string> words;
    for (const auto& w : codewords_[l]) words.push_back(w.str());
    m["codewords"] = words;  // bit 0 first (most significant bit last)
    modes.push_back(m);
  }
  j["modes"] = modes;
  return j.dump(2);
}

Codebook build_codebook(const SystemSpec& system, const EncodingKind& kind,
                        bool gsep) {
  std::vector<std::vector<Bitstring>> table;
  table.reserve(system.modes());
  for (int l = 0; l < system.modes(); ++l) {
    const int n = system.modal_dim(l);
    std::vector<Bitstring> words;
    words.reserve(n);
    switch (kind.family) {
      case EncodingFamily::Direct: {
        if (gsep) {
          throw std::invalid_argument(
              "the direct mapping cannot use the ground state encoding: "
              "no one-hot codeword is all-zero");
        }
        for (int k = 0; k < n; ++k) {
          words.emplace_back(std::uint64_t{1} << k, n);
        }
        break;
      }
      case EncodingFamily::StandardBinary: {
        const int q = ceil_log2(n);
        for (int k = 0; k < n; ++k) words.push_back(binary_decompose(k, q));
        break;
      }
      case EncodingFamily::GrayCode: {
        const int q = ceil_log2(n);
        for (int k = 0; k < n; ++k) {
          words.emplace_back(gray_word(static_cast<std::uint64_t>(k)), q);
        }
        break;
      }
      case EncodingFamily::Compact: {
        const int q = compact_register_width(n, kind.threshold);
        // ascending weight, ascending value within a weight class
        for (int w = 0; w <= kind.threshold && static_cast<int>(words.size()) < n;
             ++w) {
          for (std::uint64_t v = 0; v < (std::uint64_t{1} << q); ++v) {
            if (std::popcount(v) == w) {
              words.emplace_back(v, q);
              if (static_cast<int>(words.size()) == n) break;
            }
          }
        }
        break;
      }
    }
    table.push_back(std::move(words));
  }
  return Codebook(system, kind, gsep, std::move(table));
}

int total_excitation_hamming(const Codebook& cb) {
  const auto& sys = cb.system();
  int total = 0;
  // singles out of the reference modal 0
  for (int l = 0; l < sys.modes(); ++l) {
    for (int r = 1; r < sys.modal_dim(l); ++r) {
      total += cb.excitation_hamming(l, r, 0);
    }
  }
  // doubles touch two modes; their distances add
  for (int l = 0; l < sys.modes(); ++l) {
    for (int m = l + 1; m < sys.modes(); ++m) {
      for (int r = 1; r < sys.modal_dim(l); ++r) {
        for (int p = 1; p < sys.modal_dim(m); ++p) {
          total += cb.excitation_hamming(l, r, 0) + cb.excitation_hamming(m, p, 0);
        }
      }
    }
  }
  return total;
}

std::vector<RhdRow> rhd_report(const SystemSpec& system,
                               const std::vector<EncodingKind>& kinds) {
  // direct-mapping total: every excitation costs dh = 2 per touched mode
  long long singles = 0;
  for (int l = 0; l < system.modes(); ++l) singles += system.modal_dim(l) - 1;
  long long doubles = 0;
  for (int l = 0; l < system.modes(); ++l) {
    for (int m = l + 1; m < system.modes(); ++m) {
      doubles += static_cast<long long>(system.modal_dim(l) - 1) *
                 (system.modal_dim(m) - 1);
    }
  }
  const double dm_total = 2.0 * static_cast<double>(singles) +
                          4.0 * static_cast<double>(doubles);

  std::vector<RhdRow> rows;
  for (const auto& kind : kinds) {
    const bool gsep = kind.family != EncodingFamily::Direct;
    Codebook cb = build_codebook(system, kind, gsep);
    RhdRow row;
    row.kind = kind;
    row.total_hd = total_excitation_hamming(cb);
    row.relative_hd = static_cast<double>(row.total_hd) / dm_total;
    rows.push_back(row);
  }
  return rows;
}

}  // namespace bosonenc
