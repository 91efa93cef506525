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

#include <complex>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "bosonenc/encoding.hpp"
#include "bosonenc/modal.hpp"

namespace bosonenc {

using cplx = std::complex<double>;

/// Tensor product of single-qubit Pauli letters over a global register,
/// stored as X/Z bit masks: qubit q carries X if x bit q is set, Z if z bit
/// q is set, Y if both, I if neither. |0> is the +1 eigenstate of Z.
struct PauliString {
  std::uint64_t x = 0;
  std::uint64_t z = 0;
  int width = 0;

  PauliString() = default;
  PauliString(std::uint64_t x_mask, std::uint64_t z_mask, int w);

  static PauliString identity(int width) { return PauliString(0, 0, width); }
  /// Letters with qubit 0 first, e.g. "XIZ" puts X on qubit 0.
  static PauliString from_letters(const std::string& letters);

  char letter(int q) const;
  std::string letters() const;
  int weight() const;
  bool is_identity() const { return x == 0 && z == 0; }

  /// Phase picked up acting on basis state |j>: P|j> = phase(j) |j ^ x>.
  cplx basis_phase(std::uint64_t j) const;

  friend bool operator==(const PauliString& a, const PauliString& b) = default;
  friend auto operator<=>(const PauliString& a, const PauliString& b) {
    if (auto c = a.x <=> b.x; c != 0) return c;
    return a.z <=> b.z;
  }
};

/// P * Q as (phase, string); widths must match.
std::pair<cplx, PauliString> multiply(const PauliString& p, const PauliString& q);

/// Weighted sum of Pauli strings with complex coefficients. Terms with
/// |coefficient| < 1e-12 are dropped on simplification; term order is the
/// canonical (x, z) mask order, so iteration is deterministic.
class PauliSum {
 public:
  static constexpr double kDropThreshold = 1e-12;

  PauliSum() = default;
  explicit PauliSum(int width) : width_(width) {}
  PauliSum(const PauliString& p, cplx coeff);

  static PauliSum identity(int width, cplx coeff = 1.0);
  static PauliSum zero(int width) { return PauliSum(width); }

  int width() const { return width_; }
  std::size_t size() const { return terms_.size(); }
  bool empty() const { return terms_.empty(); }

  void add(const PauliString& p, cplx coeff);
  cplx coefficient(const PauliString& p) const;

  const std::map<PauliString, cplx>& terms() const { return terms_; }

  PauliSum& operator+=(const PauliSum& other);
  PauliSum& operator-=(const PauliSum& other);
  PauliSum& operator*=(cplx scalar);
  friend PauliSum operator+(PauliSum a, const PauliSum& b) { return a += b; }
  friend PauliSum operator-(PauliSum a, const PauliSum& b) { return a -= b; }
  friend PauliSum operator*(PauliSum a, cplx s) { return a *= s; }
  friend PauliSum operator*(cplx s, PauliSum a) { return a *= s; }

  /// Termwise conjugate (Pauli strings are hermitian).
  PauliSum adjoint() const;

  /// True when every coefficient is real within `tol`.
  bool is_hermitian(double tol = 1e-10) const;

  /// Largest |coefficient| difference against `other`.
  double distance(const PauliSum& other) const;

  std::string to_text() const;
  static PauliSum from_text(const std::string& text, int width);

 private:
  void prune(const PauliString& p);

  int width_ = 0;
  std::map<PauliString, cplx> terms_;
};

/// Distributive product with Pauli phase tracking; widths must match.
PauliSum multiply(const PauliSum& a, const PauliSum& b);

/// t - adjoint(t): purely imaginary coefficients, exp of the result unitary.
PauliSum anti_hermitian_part(const PauliSum& t);

/// Dense 2^width matrix of the sum. Guarded by a width cap.
Eigen::MatrixXcd to_matrix(const PauliSum& a, int max_width = 14);

/// Matrix of the sum restricted to the span of the given basis states:
/// entry (i, j) = <states[i]| a |states[j]>.
Eigen::MatrixXcd matrix_on_states(const PauliSum& a,
                                  const std::vector<Bitstring>& states);

/// Qubit image of the transition operator a^dag_r a_s on mode l of the
/// codebook: sigma+ / sigma- on bits where the two codewords differ, and
/// (I - Z)/2 on bits where both hold a 1. Compact codes additionally carry
/// (I + Z)/2 projectors on shared zero bits, making the operator exactly
/// |code(r)><code(s)| on the mode register; the one-hot direct mapping skips
/// them (the bare product is already exact on the encoded subspace, and this
/// keeps its Pauli structure identical for every excitation).
PauliSum ladder_to_pauli(const Codebook& cb, int l, int r, int s);

}  // namespace bosonenc
