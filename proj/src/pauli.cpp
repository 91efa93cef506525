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

#include "bosonenc/pauli.hpp"

#include <bit>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace bosonenc {

namespace {

constexpr cplx kIPowers[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};

// letter code: x + 2z, i.e. I=0 X=1 Z=2 Y=3
inline int letter_code(const PauliString& p, int q) {
  return static_cast<int>((p.x >> q) & 1) + 2 * static_cast<int>((p.z >> q) & 1);
}

// i-power picked up by (left letter) * (right letter)
constexpr int kPhaseTable[4][4] = {
    // I  X  Z  Y
    {0, 0, 0, 0},  // I
    {0, 0, 3, 1},  // X: X*Z=-iY, X*Y=iZ
    {0, 1, 0, 3},  // Z: Z*X=iY,  Z*Y=-iX
    {0, 3, 1, 0},  // Y: Y*X=-iZ, Y*Z=iX
};

}  // namespace

PauliString::PauliString(std::uint64_t x_mask, std::uint64_t z_mask, int w)
    : x(x_mask), z(z_mask), width(w) {
  if (w < 0 || w > 64) throw std::invalid_argument("PauliString width out of range");
  if (w < 64 && ((x >> w) != 0 || (z >> w) != 0)) {
    throw std::invalid_argument("PauliString mask exceeds width");
  }
}

PauliString PauliString::from_letters(const std::string& letters) {
  std::uint64_t x = 0, z = 0;
  for (std::size_t q = 0; q < letters.size(); ++q) {
    switch (letters[q]) {
      case 'I':
        break;
      case 'X':
        x |= std::uint64_t{1} << q;
        break;
      case 'Y':
        x |= std::uint64_t{1} << q;
        z |= std::uint64_t{1} << q;
        break;
      case 'Z':
        z |= std::uint64_t{1} << q;
        break;
      default:
        throw std::invalid_argument("Pauli letter must be one of IXYZ");
    }
  }
  return PauliString(x, z, static_cast<int>(letters.size()));
}

char PauliString::letter(int q) const {
  if (q < 0 || q >= width) throw std::out_of_range("qubit index out of range");
  static constexpr char kLetters[4] = {'I', 'X', 'Z', 'Y'};
  return kLetters[letter_code(*this, q)];
}

std::string PauliString::letters() const {
  std::string s(width, 'I');
  for (int q = 0; q < width; ++q) s[q] = letter(q);
  return s;
}

int PauliString::weight() const { return std::popcount(x | z); }

cplx PauliString::basis_phase(std::uint64_t j) const {
  const int ypow = std::popcount(x & z) & 3;
  const bool neg = std::popcount(j & z) & 1;
  cplx ph = kIPowers[ypow];
  return neg ? -ph : ph;
}

std::pair<cplx, PauliString> multiply(const PauliString& p, const PauliString& q) {
  if (p.width != q.width) throw std::invalid_argument("Pauli width mismatch");
  int ipow = 0;
  std::uint64_t overlap = (p.x | p.z) & (q.x | q.z);
  while (overlap) {
    const int bit = std::countr_zero(overlap);
    overlap &= overlap - 1;
    ipow += kPhaseTable[letter_code(p, bit)][letter_code(q, bit)];
  }
  return {kIPowers[ipow & 3], PauliString(p.x ^ q.x, p.z ^ q.z, p.width)};
}

PauliSum::PauliSum(const PauliString& p, cplx coeff) : width_(p.width) {
  add(p, coeff);
}

PauliSum PauliSum::identity(int width, cplx coeff) {
  PauliSum s(width);
  s.add(PauliString::identity(width), coeff);
  return s;
}

void PauliSum::add(const PauliString& p, cplx coeff) {
  if (width_ == 0 && terms_.empty()) width_ = p.width;
  if (p.width != width_) throw std::invalid_argument("PauliSum width mismatch");
  auto [it, inserted] = terms_.try_emplace(p, coeff);
  if (!inserted) it->second += coeff;
  prune(p);
}

void PauliSum::prune(const PauliString& p) {
  auto it = terms_.find(p);
  if (it != terms_.end() && std::abs(it->second) < kDropThreshold) {
    terms_.erase(it);
  }
}

cplx PauliSum::coefficient(const PauliString& p) const {
  auto it = terms_.find(p);
  return it == terms_.end() ? cplx{0, 0} : it->second;
}

PauliSum& PauliSum::operator+=(const PauliSum& other) {
  if (width_ == 0) width_ = other.width_;
  if (other.width_ != 0 && other.width_ != width_) {
    throw std::invalid_argument("PauliSum width mismatch");
  }
  for (const auto& [p, c] : other.terms_) add(p, c);
  return *this;
}

PauliSum& PauliSum::operator-=(const PauliSum& other) {
  if (width_ == 0) width_ = other.width_;
  if (other.width_ != 0 && other.width_ != width_) {
    throw std::invalid_argument("PauliSum width mismatch");
  }
  for (const auto& [p, c] : other.terms_) add(p, -c);
  return *this;
}

PauliSum& PauliSum::operator*=(cplx scalar) {
  if (std::abs(scalar) < kDropThreshold) {
    terms_.clear();
    return *this;
  }
  for (auto& [p, c] : terms_) c *= scalar;
  return *this;
}

PauliSum PauliSum::adjoint() const {
  PauliSum out(width_);
  for (const auto& [p, c] : terms_) out.add(p, std::conj(c));
  return out;
}

bool PauliSum::is_hermitian(double tol) const {
  for (const auto& [p, c] : terms_) {
    if (std::abs(c.imag()) > tol) return false;
  }
  return true;
}

double PauliSum::distance(const PauliSum& other) const {
  double d = 0.0;
  for (const auto& [p, c] : terms_) {
    d = std::max(d, std::abs(c - other.coefficient(p)));
  }
  for (const auto& [p, c] : other.terms_) {
    d = std::max(d, std::abs(c - coefficient(p)));
  }
  return d;
}

std::string PauliSum::to_text() const {
  std::ostringstream os;
  os.precision(17);
  for (const auto& [p, c] : terms_) {
    os << c.real() << " " << c.imag() << " " << p.letters() << "\n";
  }
  return os.str();
}

PauliSum PauliSum::from_text(const std::string& text, int width) {
  PauliSum out(width);
  std::istringstream is(text);
  std::string line;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    std::istringstream ls(line);
    double re = 0, im = 0;
    std::string letters;
    if (!(ls >> re >> im >> letters)) {
      throw std::invalid_argument("malformed PauliSum line: " + line);
    }
    if (static_cast<int>(letters.size()) != width) {
      throw std::invalid_argument("PauliSum line has wrong width: " + line);
    }
    out.add(PauliString::from_letters(letters), cplx{re, im});
  }
  return out;
}

PauliSum multiply(const PauliSum& a, const PauliSum& b) {
  if (a.width() != b.width()) throw std::invalid_argument("PauliSum width mismatch");
  PauliSum out(a.width());
  for (const auto& [p, cp] : a.terms()) {
    for (const auto& [q, cq] : b.terms()) {
      auto [phase, r] = multiply(p, q);
      out.add(r, phase * cp * cq);
    }
  }
  return out;
}

PauliSum anti_hermitian_part(const PauliSum& t) {
  PauliSum out(t.width());
  for (const auto& [p, c] : t.terms()) {
    out.add(p, cplx{0.0, 2.0 * c.imag()});
  }
  return out;
}

Eigen::MatrixXcd to_matrix(const PauliSum& a, int max_width) {
  if (a.width() > max_width) {
    throw std::invalid_argument("to_matrix: width exceeds cap");
  }
  const std::size_t dim = std::size_t{1} << a.width();
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
  for (const auto& [p, c] : a.terms()) {
    for (std::uint64_t j = 0; j < dim; ++j) {
      m(j ^ p.x, j) += c * p.basis_phase(j);
    }
  }
  return m;
}

Eigen::MatrixXcd matrix_on_states(const PauliSum& a,
                                  const std::vector<Bitstring>& states) {
  std::unordered_map<std::uint64_t, std::size_t> index;
  for (std::size_t i = 0; i < states.size(); ++i) {
    if (states[i].width() != a.width()) {
      throw std::invalid_argument("state width mismatch");
    }
    index[states[i].value()] = i;
  }
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(states.size(), states.size());
  for (const auto& [p, c] : a.terms()) {
    for (std::size_t j = 0; j < states.size(); ++j) {
      const std::uint64_t src = states[j].value();
      auto it = index.find(src ^ p.x);
      if (it != index.end()) {
        m(it->second, j) += c * p.basis_phase(src);
      }
    }
  }
  return m;
}

PauliSum ladder_to_pauli(const Codebook& cb, int l, int r, int s) {
  const Bitstring& wr = cb.codeword(l, r);
  const Bitstring& ws = cb.codeword(l, s);
  const int offset = cb.register_offset(l);
  const int width = cb.total_qubits();

  // One-hot codewords never share a set bit, so the bare ladder product is
  // already exact on the encoded subspace; compact codes need the (I+Z)/2
  // projectors on shared zero bits to annihilate the other codewords.
  const bool zero_projectors = cb.kind().family != EncodingFamily::Direct;

  PauliSum acc = PauliSum::identity(width);
  for (int i = 0; i < wr.width(); ++i) {
    const int q = offset + i;
    const bool rb = wr.bit(i);
    const bool sb = ws.bit(i);
    if (!rb && !sb && !zero_projectors) continue;
    PauliSum factor(width);
    const PauliString xq(std::uint64_t{1} << q, 0, width);
    const PauliString yq(std::uint64_t{1} << q, std::uint64_t{1} << q, width);
    const PauliString zq(0, std::uint64_t{1} << q, width);
    if (rb && !sb) {  // sigma+ = (X - iY)/2
      factor.add(xq, 0.5);
      factor.add(yq, cplx{0, -0.5});
    } else if (!rb && sb) {  // sigma- = (X + iY)/2
      factor.add(xq, 0.5);
      factor.add(yq, cplx{0, 0.5});
    } else if (!rb) {  // both 0: (I + Z)/2
      factor.add(PauliString::identity(width), 0.5);
      factor.add(zq, 0.5);
    } else {  // both 1: (I - Z)/2
      factor.add(PauliString::identity(width), 0.5);
      factor.add(zq, -0.5);
    }
    acc = multiply(acc, factor);
  }
  return acc;
}

}  // namespace bosonenc
