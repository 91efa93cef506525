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

#include "bosonenc/hamiltonian.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace bosonenc {

double ho_matrix_element(HoOperator op, int m, int n) {
  if (m < 0 || n < 0) throw std::invalid_argument("HO indices must be >= 0");
  const double dn = n;
  const double s2 = std::sqrt(2.0);
  switch (op) {
    case HoOperator::Q:
      if (m == n + 1) return std::sqrt(dn + 1) / s2;
      if (m == n - 1) return std::sqrt(dn) / s2;
      return 0.0;
    case HoOperator::Q2:
      if (m == n) return (2 * dn + 1) / 2;
      if (m == n + 2) return std::sqrt((dn + 1) * (dn + 2)) / 2;
      if (m == n - 2) return std::sqrt(dn * (dn - 1)) / 2;
      return 0.0;
    case HoOperator::Q3:
      if (m == n + 3) return std::sqrt((dn + 1) * (dn + 2) * (dn + 3)) / (2 * s2);
      if (m == n + 1) return 3 * (dn + 1) * std::sqrt(dn + 1) / (2 * s2);
      if (m == n - 1) return 3 * dn * std::sqrt(dn) / (2 * s2);
      if (m == n - 3) return std::sqrt(dn * (dn - 1) * (dn - 2)) / (2 * s2);
      return 0.0;
    case HoOperator::Q4:
      if (m == n) return 3 * (2 * dn * dn + 2 * dn + 1) / 4;
      if (m == n + 2) return (2 * dn + 3) * std::sqrt((dn + 1) * (dn + 2)) / 2;
      if (m == n - 2) return (2 * dn - 1) * std::sqrt(dn * (dn - 1)) / 2;
      if (m == n + 4)
        return std::sqrt((dn + 1) * (dn + 2) * (dn + 3) * (dn + 4)) / 4;
      if (m == n - 4) return std::sqrt(dn * (dn - 1) * (dn - 2) * (dn - 3)) / 4;
      return 0.0;
    case HoOperator::D2:
      // d^2/dq^2 = -p^2, so -1/2 d^2/dq^2 has diagonal (2n+1)/4
      if (m == n) return -(2 * dn + 1) / 2;
      if (m == n + 2) return std::sqrt((dn + 1) * (dn + 2)) / 2;
      if (m == n - 2) return std::sqrt(dn * (dn - 1)) / 2;
      return 0.0;
  }
  return 0.0;
}

namespace {

HoOperator power_operator(int power) {
  switch (power) {
    case 1:
      return HoOperator::Q;
    case 2:
      return HoOperator::Q2;
    case 3:
      return HoOperator::Q3;
    case 4:
      return HoOperator::Q4;
    default:
      throw std::invalid_argument("coordinate power must be in [1, 4]");
  }
}

Eigen::MatrixXd ho_operator_matrix(HoOperator op, int dim) {
  Eigen::MatrixXd m(dim, dim);
  for (int a = 0; a < dim; ++a) {
    for (int b = 0; b < dim; ++b) m(a, b) = ho_matrix_element(op, a, b);
  }
  return m;
}

std::vector<QffTerm> parse_terms(const nlohmann::json& arr, int expected_order,
                                 int modes) {
  std::vector<QffTerm> out;
  for (const auto& t : arr) {
    QffTerm term;
    term.modes = t.at("modes").get<std::vector<int>>();
    term.coeff = t.at("coeff").get<double>();
    if (static_cast<int>(term.modes.size()) != expected_order) {
      throw std::invalid_argument("force-field term has wrong order");
    }
    for (int m : term.modes) {
      if (m < 0 || m >= modes) {
        throw std::invalid_argument("force-field term touches unknown mode");
      }
    }
    out.push_back(std::move(term));
  }
  return out;
}

}  // namespace

QuarticForceField QuarticForceField::from_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  QuarticForceField qff;
  qff.omega = j.at("omega").get<std::vector<double>>();
  if (qff.omega.empty()) throw std::invalid_argument("omega list is empty");
  const int modes = static_cast<int>(qff.omega.size());
  if (j.contains("cubic")) qff.cubic = parse_terms(j["cubic"], 3, modes);
  if (j.contains("quartic")) qff.quartic = parse_terms(j["quartic"], 4, modes);
  if (j.contains("v0")) qff.v0 = j["v0"].get<double>();
  return qff;
}

std::string QuarticForceField::to_json() const {
  nlohmann::ordered_json j;
  j["omega"] = omega;
  j["v0"] = v0;
  auto dump_terms = [](const std::vector<QffTerm>& terms) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& t : terms) {
      arr.push_back({{"modes", t.modes}, {"coeff", t.coeff}});
    }
    return arr;
  };
  j["cubic"] = dump_terms(cubic);
  j["quartic"] = dump_terms(quartic);
  return j.dump(2);
}

VibrationalHamiltonian::VibrationalHamiltonian(
    SystemSpec system, double v0, std::vector<Eigen::MatrixXd> one_mode,
    std::map<std::pair<int, int>, Eigen::MatrixXd> two_mode)
    : system_(std::move(system)),
      v0_(v0),
      one_mode_(std::move(one_mode)),
      two_mode_(std::move(two_mode)) {
  if (static_cast<int>(one_mode_.size()) != system_.modes()) {
    throw std::invalid_argument("need one block per mode");
  }
  for (int l = 0; l < system_.modes(); ++l) {
    const auto& h = one_mode_[l];
    if (h.rows() != system_.modal_dim(l) || h.cols() != system_.modal_dim(l)) {
      throw std::invalid_argument("one-mode block has wrong dimension");
    }
    if ((h - h.transpose()).cwiseAbs().maxCoeff() > 1e-9) {
      throw std::invalid_argument("one-mode block must be symmetric");
    }
  }
  for (const auto& [pair, t] : two_mode_) {
    const auto [l, m] = pair;
    if (l < 0 || m <= l || m >= system_.modes()) {
      throw std::invalid_argument("coupling pair must satisfy 0 <= l < m < L");
    }
    const int dim = system_.modal_dim(l) * system_.modal_dim(m);
    if (t.rows() != dim || t.cols() != dim) {
      throw std::invalid_argument("coupling tensor has wrong dimension");
    }
    if ((t - t.transpose()).cwiseAbs().maxCoeff() > 1e-9) {
      throw std::invalid_argument("coupling tensor must be hermitian");
    }
  }
}

const Eigen::MatrixXd& VibrationalHamiltonian::one_mode(int l) const {
  if (l < 0 || l >= system_.modes()) {
    throw std::out_of_range("mode index out of range");
  }
  return one_mode_[l];
}

const Eigen::MatrixXd& VibrationalHamiltonian::two_mode(int l, int m) const {
  auto it = two_mode_.find({l, m});
  if (it == two_mode_.end()) return empty_;
  return it->second;
}

double VibrationalHamiltonian::configuration_element(
    const Configuration& r, const Configuration& s) const {
  const int L = system_.modes();
  int diff_count = 0;
  int d1 = -1, d2 = -1;
  for (int l = 0; l < L; ++l) {
    if (r.occupied(l) != s.occupied(l)) {
      if (diff_count == 0) d1 = l;
      else if (diff_count == 1) d2 = l;
      ++diff_count;
      if (diff_count > 2) return 0.0;
    }
  }
  double val = 0.0;
  if (diff_count == 0) {
    val = v0_;
    for (int l = 0; l < L; ++l) val += one_mode_[l](r.occupied(l), s.occupied(l));
    for (const auto& [pair, t] : two_mode_) {
      const auto [l, m] = pair;
      const int nm = system_.modal_dim(m);
      const int row = r.occupied(l) * nm + r.occupied(m);
      val += t(row, row);
    }
  } else if (diff_count == 1) {
    val = one_mode_[d1](r.occupied(d1), s.occupied(d1));
    for (const auto& [pair, t] : two_mode_) {
      const auto [l, m] = pair;
      if (l != d1 && m != d1) continue;
      const int nm = system_.modal_dim(m);
      val += t(r.occupied(l) * nm + r.occupied(m),
               s.occupied(l) * nm + s.occupied(m));
    }
  } else {
    auto it = two_mode_.find({std::min(d1, d2), std::max(d1, d2)});
    if (it != two_mode_.end()) {
      const auto [l, m] = it->first;
      const int nm = system_.modal_dim(m);
      val = it->second(r.occupied(l) * nm + r.occupied(m),
                       s.occupied(l) * nm + s.occupied(m));
    }
  }
  return val;
}

VibrationalHamiltonian assemble_from_qff(const QuarticForceField& qff,
                                         const SystemSpec& system) {
  if (static_cast<int>(qff.omega.size()) != system.modes()) {
    throw std::invalid_argument("omega list must cover every mode");
  }

  std::vector<Eigen::MatrixXd> one_mode;
  for (int l = 0; l < system.modes(); ++l) {
    const int n = system.modal_dim(l);
    // (omega/2)(p^2 + q^2): kinetic is -(omega/2) d^2/dq^2
    Eigen::MatrixXd h = qff.omega[l] * (-0.5 * ho_operator_matrix(HoOperator::D2, n) +
                                        0.5 * ho_operator_matrix(HoOperator::Q2, n));
    one_mode.push_back(std::move(h));
  }

  std::map<std::pair<int, int>, Eigen::MatrixXd> two_mode;
  auto add_term = [&](const QffTerm& term) {
    std::map<int, int> powers;
    for (int m : term.modes) powers[m] += 1;
    if (powers.size() > 2) {
      throw std::invalid_argument(
          "force-field term couples more than two modes; only the two-mode "
          "expansion is supported");
    }
    if (powers.size() == 1) {
      const auto [l, p] = *powers.begin();
      one_mode[l] += term.coeff * ho_operator_matrix(power_operator(p),
                                                     system.modal_dim(l));
      return;
    }
    auto it = powers.begin();
    const auto [l, pl] = *it;
    const auto [m, pm] = *std::next(it);
    const int nl = system.modal_dim(l);
    const int nm = system.modal_dim(m);
    auto& tensor = two_mode.try_emplace({l, m}, Eigen::MatrixXd::Zero(nl * nm, nl * nm))
                       .first->second;
    const Eigen::MatrixXd ml = ho_operator_matrix(power_operator(pl), nl);
    const Eigen::MatrixXd mm = ho_operator_matrix(power_operator(pm), nm);
    for (int r = 0; r < nl; ++r) {
      for (int s = 0; s < nl; ++s) {
        for (int p = 0; p < nm; ++p) {
          for (int q = 0; q < nm; ++q) {
            tensor(r * nm + p, s * nm + q) += term.coeff * ml(r, s) * mm(p, q);
          }
        }
      }
    }
  };
  for (const auto& t : qff.cubic) add_term(t);
  for (const auto& t : qff.quartic) add_term(t);

  return VibrationalHamiltonian(system, qff.v0, std::move(one_mode),
                                std::move(two_mode));
}

namespace {

// configuration index with the last mode fastest
std::vector<Configuration> enumerate_configurations(const SystemSpec& system) {
  std::vector<Configuration> out;
  out.reserve(system.config_dim());
  std::vector<int> occ(system.modes(), 0);
  while (true) {
    out.emplace_back(system, occ);
    int l = system.modes() - 1;
    while (l >= 0) {
      if (++occ[l] < system.modal_dim(l)) break;
      occ[l] = 0;
      --l;
    }
    if (l < 0) break;
  }
  return out;
}

}  // namespace

Eigen::MatrixXd configuration_matrix(const VibrationalHamiltonian& h) {
  const auto configs = enumerate_configurations(h.system());
  const std::size_t dim = configs.size();
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(dim, dim);
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = 0; j < dim; ++j) {
      m(i, j) = h.configuration_element(configs[i], configs[j]);
    }
  }
  return m;
}

std::vector<double> exact_diagonalize(const VibrationalHamiltonian& h,
                                      std::size_t dim_cap) {
  if (h.system().config_dim() > dim_cap) {
    throw std::invalid_argument("configuration space exceeds the dimension cap");
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(configuration_matrix(h));
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("eigensolver failed");
  }
  const auto& ev = solver.eigenvalues();
  std::vector<double> out(ev.data(), ev.data() + ev.size());
  std::sort(out.begin(), out.end());
  return out;
}

PauliSum to_pauli(const VibrationalHamiltonian& h, const Codebook& cb) {
  if (cb.system().modal_dims != h.system().modal_dims) {
    throw std::invalid_argument("codebook system does not match Hamiltonian");
  }
  const int width = cb.total_qubits();
  PauliSum out(width);
  if (std::abs(h.v0()) > 0) {
    out += PauliSum::identity(width, h.v0());
  }
  for (int l = 0; l < h.system().modes(); ++l) {
    const auto& block = h.one_mode(l);
    for (int r = 0; r < block.rows(); ++r) {
      for (int s = 0; s < block.cols(); ++s) {
        if (std::abs(block(r, s)) < 1e-14) continue;
        out += block(r, s) * ladder_to_pauli(cb, l, r, s);
      }
    }
  }
  for (const auto& [pair, tensor] : h.couplings()) {
    const auto [l, m] = pair;
    const int nl = h.system().modal_dim(l);
    const int nm = h.system().modal_dim(m);
    for (int r = 0; r < nl; ++r) {
      for (int s = 0; s < nl; ++s) {
        PauliSum left = ladder_to_pauli(cb, l, r, s);
        for (int p = 0; p < nm; ++p) {
          for (int q = 0; q < nm; ++q) {
            const double c = tensor(r * nm + p, s * nm + q);
            if (std::abs(c) < 1e-14) continue;
            out += c * multiply(left, ladder_to_pauli(cb, m, p, q));
          }
        }
      }
    }
  }
  return out;
}

std::vector<Bitstring> encoded_configuration_states(const Codebook& cb) {
  std::vector<Bitstring> out;
  for (const auto& c : enumerate_configurations(cb.system())) {
    out.push_back(cb.encode(c));
  }
  return out;
}

}  // namespace bosonenc
