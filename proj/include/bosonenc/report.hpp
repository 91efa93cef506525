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
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "bosonenc/encoding.hpp"
#include "bosonenc/qeom.hpp"
#include "bosonenc/vqe.hpp"

namespace bosonenc {

/// Everything a CLI run needs; serialized (and hashed) into every output.
struct RunConfig {
  std::string command = "compare";
  std::vector<std::string> encodings = {"cea", "sb", "gc", "dm"};
  int cea_threshold = 2;
  bool gsep = true;
  int modes = 2;
  int modal_dim = 2;
  int nl_min = 2;
  int nl_max = 16;
  std::string qff;
  double p1 = 0.0;
  double p2 = 0.0;
  int samples = 1;
  std::string shots = "exact";
  std::uint64_t seed = 0;
  int bins = 35;
  std::string out_dir = ".";
  bool svg = false;
  int max_evals = 500;
  double rho_begin = 0.5;
  double rho_end = 1e-6;
  int trotter_steps = 1;

  std::string to_json() const;
  std::uint64_t hash() const;
  std::optional<long> parsed_shots() const;
  void validate() const;
};

std::uint64_t fnv1a64(std::string_view s);

/// Worker count for sample dispatch: hardware concurrency, capped by the
/// BOSON_ENCODE_THREADS environment variable.
int worker_thread_count();

/// Run fn(0..n-1) on a worker pool; blocks until done. Results must be
/// written into per-index slots by the callee.
void parallel_for(int n, const std::function<void(int)>& fn);

struct CompareRow {
  EncodingKind kind;
  int nl = 0;
  int qubits_per_mode = 0;
  long cnot_raw = 0;
  long cnot_opt = 0;
  long one_qubit_raw = 0;
  long one_qubit_opt = 0;
  long total_hd = 0;
  double relative_hd = 0.0;
  bool skipped = false;
};

/// Two-mode (or general) UCCSD resource sweep over modal dimensions. Rows
/// whose register would exceed the 64-qubit mask limit are flagged skipped.
std::vector<CompareRow> compare_sweep(const RunConfig& config);

struct Histogram {
  double lo = 0.0;
  double hi = 0.0;
  std::vector<long> counts;
};

Histogram make_histogram(std::span<const double> values, int bins);

/// Sorted (|value - reference|, cumulative fraction) pairs.
std::vector<std::pair<double, double>> cumulative_errors(
    std::span<const double> values, double reference);

struct VqeSample {
  int index = 0;
  std::uint64_t seed = 0;
  double energy = 0.0;
  int evaluations = 0;
  bool converged = false;
  std::vector<double> amplitudes;
};

struct VqeRun {
  RunConfig config;
  std::vector<double> exact_levels;
  std::vector<VqeSample> samples;
};

struct QeomSample {
  int index = 0;
  std::uint64_t seed = 0;
  bool converged = false;
  bool regularized = false;
  /// total energies: [0] ground, then ground + first excitations
  std::vector<double> totals;
};

struct QeomRun {
  RunConfig config;
  std::vector<double> exact_levels;
  int num_states = 4;
  std::vector<QeomSample> samples;
};

VqeRun run_vqe_samples(const RunConfig& config);
QeomRun run_qeom_samples(const RunConfig& config);

/// CLI entry points: compute and write the output files into config.out_dir.
int cmd_compare(const RunConfig& config);
int cmd_vqe(const RunConfig& config);
int cmd_qeom(const RunConfig& config);
int cmd_fixtures(const RunConfig& config);

}  // namespace bosonenc
