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

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <Eigen/Dense>

#include "bosonenc/vqe.hpp"

namespace bosonenc {

namespace {

using Vec = Eigen::VectorXd;

Vec to_eigen(std::span<const double> x) {
  return Eigen::Map<const Vec>(x.data(), x.size());
}

}  // namespace

CobylaResult cobyla_minimize(
    const std::function<double(std::span<const double>)>& f,
    std::vector<double> x0, const CobylaConfig& config) {
  const int n = static_cast<int>(x0.size());
  if (n < 1) throw std::invalid_argument("need at least one variable");
  if (config.rho_begin <= config.rho_end || config.rho_end <= 0) {
    throw std::invalid_argument("need rho_begin > rho_end > 0");
  }

  CobylaResult result;
  int evals = 0;
  const int budget = config.max_evals;

  auto evaluate = [&](const Vec& x) {
    std::vector<double> buf(x.data(), x.data() + x.size());
    ++evals;
    return f(std::span<const double>(buf));
  };

  double rho = config.rho_begin;

  // simplex of n+1 interpolation points, vertex 0 is the incumbent best
  std::vector<Vec> sim(n + 1);
  std::vector<double> fsim(n + 1);
  sim[0] = to_eigen(x0);
  fsim[0] = evaluate(sim[0]);
  Vec best_x = sim[0];
  double best_f = fsim[0];
  for (int i = 1; i <= n && evals < budget; ++i) {
    sim[i] = sim[0];
    sim[i](i - 1) += rho;
    fsim[i] = evaluate(sim[i]);
  }

  auto note_best = [&](const Vec& x, double fx) {
    if (fx < best_f) {
      best_f = fx;
      best_x = x;
    }
  };
  for (int i = 1; i <= n; ++i) note_best(sim[i], fsim[i]);

  bool converged = false;
  int stall = 0;

  while (evals < budget) {
    // keep the best vertex at index 0
    int ib = 0;
    for (int i = 1; i <= n; ++i) {
      if (fsim[i] < fsim[ib]) ib = i;
    }
    if (ib != 0) {
      std::swap(sim[0], sim[ib]);
      std::swap(fsim[0], fsim[ib]);
    }

    // linear model: rows (sim[i] - sim[0]) * g = fsim[i] - fsim[0]
    Eigen::MatrixXd b(n, n);
    Vec rhs(n);
    for (int i = 1; i <= n; ++i) {
      b.row(i - 1) = (sim[i] - sim[0]).transpose();
      rhs(i - 1) = fsim[i] - fsim[0];
    }
    Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(b);
    qr.setThreshold(1e-12);
    if (qr.rank() < n) {
      // degenerate geometry: rebuild the simplex around the best point
      for (int i = 1; i <= n && evals < budget; ++i) {
        sim[i] = sim[0];
        sim[i](i - 1) += rho;
        fsim[i] = evaluate(sim[i]);
        note_best(sim[i], fsim[i]);
      }
      continue;
    }
    const Vec g = qr.solve(rhs);
    const double gnorm = g.norm();
    const double tiny = 1e-12 * (1.0 + std::abs(fsim[0]));

    bool improved = false;
    if (gnorm > 1e-300) {
      // probe the descent direction at rho/2 and rho, then the parabola
      // through the three samples
      const Vec dir = -g / gnorm;
      const Vec xa = sim[0] + (0.5 * rho) * dir;
      const double fa = evaluate(xa);
      note_best(xa, fa);
      Vec xb = sim[0];
      double fb = fa;
      if (evals < budget) {
        xb = sim[0] + rho * dir;
        fb = evaluate(xb);
        note_best(xb, fb);
      }
      Vec xtrial = fa <= fb ? xa : xb;
      double ftrial = std::min(fa, fb);
      // f(t) ~ f0 + p t + q t^2 sampled at 0, rho/2, rho
      const double f0 = fsim[0];
      const double q2 = 2.0 * (fb - 2.0 * fa + f0) / (rho * rho);
      if (q2 > 0 && evals < budget) {
        const double p1 = (4.0 * fa - fb - 3.0 * f0) / rho;
        double tstar = -p1 / (2.0 * q2);
        tstar = std::clamp(tstar, 0.05 * rho, 2.0 * rho);
        const Vec xc = sim[0] + tstar * dir;
        const double fc = evaluate(xc);
        note_best(xc, fc);
        if (fc < ftrial) {
          xtrial = xc;
          ftrial = fc;
        }
      }
      improved = ftrial < fsim[0] - tiny;

      // replace the worst vertex when the trial point is at least as good
      int iw = 1;
      for (int i = 2; i <= n; ++i) {
        if (fsim[i] > fsim[iw]) iw = i;
      }
      if (ftrial < fsim[iw]) {
        sim[iw] = xtrial;
        fsim[iw] = ftrial;
      }
    }

    if (improved) {
      stall = 0;
      continue;
    }

    // pull the farthest vertex to trust-region distance before shrinking
    int ifar = -1;
    double dfar = 0.0;
    for (int i = 1; i <= n; ++i) {
      const double d = (sim[i] - sim[0]).norm();
      if (d > dfar) {
        dfar = d;
        ifar = i;
      }
    }
    if (ifar >= 0 && dfar > 2.0 * rho && evals < budget) {
      sim[ifar] = sim[0] + (rho / dfar) * (sim[ifar] - sim[0]);
      fsim[ifar] = evaluate(sim[ifar]);
      note_best(sim[ifar], fsim[ifar]);
      continue;
    }

    if (++stall >= 2) {
      stall = 0;
      rho *= 0.5;
      if (rho < config.rho_end) {
        converged = true;
        break;
      }
    }
  }

  result.x.assign(best_x.data(), best_x.data() + n);
  result.fval = best_f;
  result.evaluations = evals;
  result.converged = converged;
  return result;
}

}  // namespace bosonenc
