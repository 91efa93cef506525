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

#include "bosonenc/report.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <thread>

#include <nlohmann/json.hpp>

#include "bosonenc/fixtures.hpp"
#include "bosonenc/hamiltonian.hpp"
#include "bosonenc/rng.hpp"

namespace bosonenc {

namespace {

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

}  // namespace

std::uint64_t fnv1a64(std::string_view s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string RunConfig::to_json() const {
  nlohmann::ordered_json j;
  j["command"] = command;
  j["encodings"] = encodings;
  j["cea_threshold"] = cea_threshold;
  j["gsep"] = gsep;
  j["modes"] = modes;
  j["modal_dim"] = modal_dim;
  j["nl_min"] = nl_min;
  j["nl_max"] = nl_max;
  j["qff"] = qff;
  j["p1"] = p1;
  j["p2"] = p2;
  j["samples"] = samples;
  j["shots"] = shots;
  j["seed"] = seed;
  j["bins"] = bins;
  j["svg"] = svg;
  j["max_evals"] = max_evals;
  j["rho_begin"] = rho_begin;
  j["rho_end"] = rho_end;
  j["trotter_steps"] = trotter_steps;
  return j.dump();
}

std::uint64_t RunConfig::hash() const { return fnv1a64(to_json()); }

std::optional<long> RunConfig::parsed_shots() const {
  if (shots == "exact") return std::nullopt;
  const long n = std::stol(shots);
  if (n < 1) throw std::invalid_argument("shots must be 'exact' or a positive count");
  return n;
}

void RunConfig::validate() const {
  if (samples < 1) throw std::invalid_argument("samples must be >= 1");
  if (bins < 1) throw std::invalid_argument("bins must be >= 1");
  if (modes < 1) throw std::invalid_argument("modes must be >= 1");
  if (modal_dim < 2) throw std::invalid_argument("modal-dim must be >= 2");
  (void)parsed_shots();
  (void)NoiseParams(p1, p2);
}

int worker_thread_count() {
  int n = static_cast<int>(std::thread::hardware_concurrency());
  if (n < 1) n = 1;
  if (const char* env = std::getenv("BOSON_ENCODE_THREADS")) {
    const int cap = std::atoi(env);
    if (cap >= 1) n = std::min(n, cap);
  }
  return n;
}

void parallel_for(int n, const std::function<void(int)>& fn) {
  const int workers = std::min(worker_thread_count(), n);
  if (workers <= 1) {
    for (int i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<int> next{0};
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      while (true) {
        const int i = next.fetch_add(1);
        if (i >= n) return;
        fn(i);
      }
    });
  }
  for (auto& t : pool) t.join();
}

namespace {

std::string header_comment(const RunConfig& config) {
  char buf[96];
  std::snprintf(buf, sizeof(buf), "# bosonenc csv v1 config=%016llx seed=%llu\n",
                static_cast<unsigned long long>(config.hash()),
                static_cast<unsigned long long>(config.seed));
  return buf;
}

void write_file(const std::filesystem::path& path, const std::string& body) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << body;
}

std::filesystem::path ensure_out_dir(const RunConfig& config) {
  std::filesystem::path dir(config.out_dir);
  std::filesystem::create_directories(dir);
  return dir;
}

// ---- minimal SVG line plots -------------------------------------------------

struct Series {
  std::string label;
  std::string color;
  std::vector<std::pair<double, double>> points;
};

std::string svg_panel(const std::vector<Series>& series, const std::string& title,
                      double x0, double y0, double w, double h) {
  double xmin = 1e300, xmax = -1e300, ymin = 1e300, ymax = -1e300;
  for (const auto& s : series) {
    for (auto [x, y] : s.points) {
      xmin = std::min(xmin, x);
      xmax = std::max(xmax, x);
      ymin = std::min(ymin, y);
      ymax = std::max(ymax, y);
    }
  }
  if (xmin > xmax) return "";
  if (xmax == xmin) xmax = xmin + 1;
  if (ymax == ymin) ymax = ymin + 1;
  const double pad = 34;
  auto sx = [&](double x) {
    return x0 + pad + (x - xmin) / (xmax - xmin) * (w - 2 * pad);
  };
  auto sy = [&](double y) {
    return y0 + h - pad - (y - ymin) / (ymax - ymin) * (h - 2 * pad);
  };
  std::string out;
  out += "<rect x='" + format_double(x0) + "' y='" + format_double(y0) + "' width='" +
         format_double(w) + "' height='" + format_double(h) +
         "' fill='white' stroke='#999'/>\n";
  out += "<text x='" + format_double(x0 + w / 2) + "' y='" + format_double(y0 + 16) +
         "' text-anchor='middle' font-size='12'>" + title + "</text>\n";
  int legend = 0;
  for (const auto& s : series) {
    out += "<polyline fill='none' stroke='" + s.color + "' points='";
    for (auto [x, y] : s.points) {
      out += format_double(sx(x)) + "," + format_double(sy(y)) + " ";
    }
    out += "'/>\n";
    out += "<text x='" + format_double(x0 + pad) + "' y='" +
           format_double(y0 + 28 + 12 * legend) + "' font-size='10' fill='" +
           s.color + "'>" + s.label + "</text>\n";
    ++legend;
  }
  out += "<text x='" + format_double(x0 + pad) + "' y='" +
         format_double(y0 + h - 6) + "' font-size='9'>" + format_double(xmin) +
         "</text>\n";
  out += "<text x='" + format_double(x0 + w - pad) + "' y='" +
         format_double(y0 + h - 6) + "' text-anchor='end' font-size='9'>" +
         format_double(xmax) + "</text>\n";
  out += "<text x='" + format_double(x0 + 4) + "' y='" +
         format_double(y0 + h - pad) + "' font-size='9'>" + format_double(ymin) +
         "</text>\n";
  out += "<text x='" + format_double(x0 + 4) + "' y='" + format_double(y0 + pad) +
         "' font-size='9'>" + format_double(ymax) + "</text>\n";
  return out;
}

std::string svg_document(const std::string& inner, double width, double height,
                         const RunConfig& config) {
  char hdr[96];
  std::snprintf(hdr, sizeof(hdr), "<!-- bosonenc svg v1 config=%016llx seed=%llu -->\n",
                static_cast<unsigned long long>(config.hash()),
                static_cast<unsigned long long>(config.seed));
  return "<svg xmlns='http://www.w3.org/2000/svg' width='" + format_double(width) +
         "' height='" + format_double(height) + "'>\n" + hdr + inner + "</svg>\n";
}

std::string encoding_color(const std::string& name) {
  if (name.rfind("cea", 0) == 0) return "#1f77b4";
  if (name == "sb") return "#d62728";
  if (name == "gc") return "#7f7f7f";
  if (name == "dm") return "#2ca02c";
  return "#000000";
}

// ---- shared problem setup ---------------------------------------------------

struct Problem {
  SystemSpec system;
  Codebook codebook;
  PauliSum hamiltonian;
  ClusterOperator cluster;
  Ansatz ansatz;
  std::vector<double> exact_levels;
};

Problem make_problem(const RunConfig& config, const EncodingKind& kind) {
  if (config.qff.empty()) {
    throw std::invalid_argument("this command needs --qff (file or fixture name)");
  }
  const QuarticForceField qff =
      QuarticForceField::from_json(fixtures::load_qff(config.qff));
  SystemSpec system(std::vector<int>(qff.omega.size(), config.modal_dim));
  const bool gsep = config.gsep && kind.family != EncodingFamily::Direct;
  Codebook cb = build_codebook(system, kind, gsep);
  VibrationalHamiltonian h = assemble_from_qff(qff, system);
  PauliSum hp = to_pauli(h, cb);
  Configuration ref = Configuration::reference(system);
  ClusterOperator cluster = build_uccsd(system, ref);
  Ansatz ansatz = make_uccsd_ansatz(cluster, cb, true, config.trotter_steps);
  std::vector<double> levels = exact_diagonalize(h);
  return Problem{std::move(system), std::move(cb),      std::move(hp),
                 std::move(cluster), std::move(ansatz), std::move(levels)};
}

EncodingKind single_encoding(const RunConfig& config) {
  if (config.encodings.size() != 1) {
    throw std::invalid_argument("this command takes exactly one --encoding");
  }
  return encoding_from_string(config.encodings[0], config.cea_threshold);
}

}  // namespace

std::vector<CompareRow> compare_sweep(const RunConfig& config) {
  std::vector<CompareRow> rows;
  for (const auto& name : config.encodings) {
    const EncodingKind kind = encoding_from_string(name, config.cea_threshold);
    for (int nl = config.nl_min; nl <= config.nl_max; ++nl) {
      CompareRow row;
      row.kind = kind;
      row.nl = nl;
      SystemSpec system(std::vector<int>(config.modes, nl));
      const bool gsep = config.gsep && kind.family != EncodingFamily::Direct;
      Codebook cb = build_codebook(system, kind, gsep);
      row.qubits_per_mode = cb.qubits_per_mode(0);
      if (cb.total_qubits() > 64) {
        row.skipped = true;
        std::cerr << "warning: skipping " << kind.name() << " N_l=" << nl
                  << " (register exceeds 64 qubits)\n";
        rows.push_back(row);
        continue;
      }
      row.total_hd = total_excitation_hamming(cb);
      long singles = 0, doubles = 0;
      for (int l = 0; l < system.modes(); ++l) singles += nl - 1;
      for (int l = 0; l < system.modes(); ++l) {
        for (int m = l + 1; m < system.modes(); ++m) {
          doubles += static_cast<long>(nl - 1) * (nl - 1);
        }
      }
      row.relative_hd =
          static_cast<double>(row.total_hd) / (2.0 * singles + 4.0 * doubles);

      ClusterOperator cluster =
          build_uccsd(system, Configuration::reference(system));
      Circuit raw = trotterize(cluster_to_pauli(cluster, cb), cb.total_qubits());
      const GateCounts rc = count_gates(raw);
      const GateCounts oc = count_gates(peephole_optimize(raw));
      row.cnot_raw = rc.cnot;
      row.one_qubit_raw = rc.one_qubit;
      row.cnot_opt = oc.cnot;
      row.one_qubit_opt = oc.one_qubit;
      rows.push_back(row);
    }
  }
  return rows;
}

Histogram make_histogram(std::span<const double> values, int bins) {
  if (bins < 1) throw std::invalid_argument("bins must be >= 1");
  if (values.empty()) throw std::invalid_argument("histogram needs values");
  Histogram h;
  h.lo = *std::min_element(values.begin(), values.end());
  h.hi = *std::max_element(values.begin(), values.end());
  if (h.hi == h.lo) h.hi = h.lo + 1e-9;
  h.counts.assign(bins, 0);
  for (double v : values) {
    int b = static_cast<int>((v - h.lo) / (h.hi - h.lo) * bins);
    b = std::clamp(b, 0, bins - 1);
    ++h.counts[b];
  }
  return h;
}

std::vector<std::pair<double, double>> cumulative_errors(
    std::span<const double> values, double reference) {
  std::vector<double> errs;
  errs.reserve(values.size());
  for (double v : values) errs.push_back(std::abs(v - reference));
  std::sort(errs.begin(), errs.end());
  std::vector<std::pair<double, double>> out;
  out.reserve(errs.size());
  for (std::size_t i = 0; i < errs.size(); ++i) {
    out.emplace_back(errs[i],
                     static_cast<double>(i + 1) / static_cast<double>(errs.size()));
  }
  return out;
}

VqeRun run_vqe_samples(const RunConfig& config) {
  config.validate();
  const EncodingKind kind = single_encoding(config);
  const Problem problem = make_problem(config, kind);

  VqeRun run;
  run.config = config;
  run.exact_levels = problem.exact_levels;
  run.samples.resize(config.samples);

  const Rng master(config.seed);
  const auto shots = config.parsed_shots();
  parallel_for(config.samples, [&](int i) {
    VqeOptions options;
    options.noise = NoiseParams(config.p1, config.p2);
    options.shots = shots;
    options.optimizer = {config.rho_begin, config.rho_end, config.max_evals};
    options.seed = master.split(static_cast<std::uint64_t>(i)).seed();
    VqeResult r = vqe_minimize(problem.hamiltonian, problem.ansatz, options);
    run.samples[i] = VqeSample{i,           r.seed,      r.energy,
                               r.evaluations, r.converged, r.amplitudes};
  });
  return run;
}

QeomRun run_qeom_samples(const RunConfig& config) {
  config.validate();
  const EncodingKind kind = single_encoding(config);
  const Problem problem = make_problem(config, kind);

  QeomRun run;
  run.config = config;
  run.exact_levels = problem.exact_levels;
  run.samples.resize(config.samples);

  const Rng master(config.seed);
  const auto shots = config.parsed_shots();
  parallel_for(config.samples, [&](int i) {
    VqeOptions options;
    options.noise = NoiseParams(config.p1, config.p2);
    options.shots = shots;
    options.optimizer = {config.rho_begin, config.rho_end, config.max_evals};
    options.seed = master.split(static_cast<std::uint64_t>(i)).seed();
    VqeResult ground = vqe_minimize(problem.hamiltonian, problem.ansatz, options);

    QeomOptions qopts;
    qopts.noise = options.noise;
    qopts.shots = shots;
    qopts.seed = master.split(0x9e0 + static_cast<std::uint64_t>(i)).seed();
    QeomResult q = qeom_excitations(ground, problem.hamiltonian, problem.cluster,
                                    problem.codebook, problem.ansatz, qopts);
    QeomSample sample;
    sample.index = i;
    sample.seed = options.seed;
    sample.converged = ground.converged;
    sample.regularized = q.regularized;
    sample.totals.push_back(ground.energy);
    for (std::size_t k = 0; k < q.excitation_energies.size() &&
                            k + 1 < static_cast<std::size_t>(run.num_states);
         ++k) {
      sample.totals.push_back(ground.energy + q.excitation_energies[k]);
    }
    run.samples[i] = std::move(sample);
  });
  return run;
}

namespace {

void write_histogram_csv(const std::filesystem::path& path, const RunConfig& config,
                         const std::vector<std::pair<std::string, Histogram>>& series) {
  std::string body = header_comment(config);
  body += "state,bin_left,bin_right,count\n";
  for (const auto& [state, h] : series) {
    const int bins = static_cast<int>(h.counts.size());
    for (int b = 0; b < bins; ++b) {
      const double left = h.lo + (h.hi - h.lo) * b / bins;
      const double right = h.lo + (h.hi - h.lo) * (b + 1) / bins;
      body += state + "," + format_double(left) + "," + format_double(right) + "," +
              std::to_string(h.counts[b]) + "\n";
    }
  }
  write_file(path, body);
}

void write_cumulative_csv(
    const std::filesystem::path& path, const RunConfig& config,
    const std::vector<std::pair<std::string, std::vector<std::pair<double, double>>>>&
        series) {
  std::string body = header_comment(config);
  body += "state,error,fraction\n";
  for (const auto& [state, rows] : series) {
    for (auto [err, frac] : rows) {
      body += state + "," + format_double(err) + "," + format_double(frac) + "\n";
    }
  }
  write_file(path, body);
}

nlohmann::ordered_json config_json(const RunConfig& config) {
  nlohmann::ordered_json j = nlohmann::ordered_json::parse(config.to_json());
  return j;
}

std::string hash_hex(const RunConfig& config) {
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx",
                static_cast<unsigned long long>(config.hash()));
  return buf;
}

}  // namespace

int cmd_compare(const RunConfig& config) {
  config.validate();
  const auto rows = compare_sweep(config);
  const auto dir = ensure_out_dir(config);

  std::string body = header_comment(config);
  body +=
      "encoding,N_l,qubits_per_mode,cnot_raw,cnot_opt,one_qubit_raw,one_qubit_opt,"
      "total_hd,relative_hd\n";
  for (const auto& r : rows) {
    if (r.skipped) continue;
    body += r.kind.name() + "," + std::to_string(r.nl) + "," +
            std::to_string(r.qubits_per_mode) + "," + std::to_string(r.cnot_raw) +
            "," + std::to_string(r.cnot_opt) + "," + std::to_string(r.one_qubit_raw) +
            "," + std::to_string(r.one_qubit_opt) + "," + std::to_string(r.total_hd) +
            "," + format_double(r.relative_hd) + "\n";
  }
  write_file(dir / "compare.csv", body);

  std::string gates = header_comment(config);
  gates += "encoding,N_l,cnot_raw,cnot_opt,one_qubit_raw,one_qubit_opt\n";
  for (const auto& r : rows) {
    if (r.skipped) continue;
    gates += r.kind.name() + "," + std::to_string(r.nl) + "," +
             std::to_string(r.cnot_raw) + "," + std::to_string(r.cnot_opt) + "," +
             std::to_string(r.one_qubit_raw) + "," + std::to_string(r.one_qubit_opt) +
             "\n";
  }
  write_file(dir / "gate_counts.csv", gates);

  if (config.svg) {
    std::vector<Series> cnot, relative, rhd, qubits;
    for (const auto& name : config.encodings) {
      Series sc{name, encoding_color(name), {}};
      Series sr = sc, sh = sc, sq = sc;
      for (const auto& r : rows) {
        if (r.skipped || r.kind.name() != encoding_from_string(name, config.cea_threshold).name())
          continue;
        sc.points.emplace_back(r.nl, static_cast<double>(r.cnot_opt));
        sh.points.emplace_back(r.nl, r.relative_hd);
        sq.points.emplace_back(r.nl, static_cast<double>(r.qubits_per_mode));
      }
      // relative CNOTs need the dm row at the same N_l
      for (const auto& r : rows) {
        if (r.skipped || r.kind.name() != encoding_from_string(name, config.cea_threshold).name())
          continue;
        for (const auto& d : rows) {
          if (!d.skipped && d.kind.family == EncodingFamily::Direct && d.nl == r.nl) {
            if (d.cnot_opt > 0) {
              sr.points.emplace_back(
                  r.nl, static_cast<double>(r.cnot_opt) / static_cast<double>(d.cnot_opt));
            }
          }
        }
      }
      cnot.push_back(sc);
      relative.push_back(sr);
      rhd.push_back(sh);
      qubits.push_back(sq);
    }
    std::string inner;
    inner += svg_panel(cnot, "optimized CNOT count", 0, 0, 360, 280);
    inner += svg_panel(relative, "CNOTs relative to dm", 370, 0, 360, 280);
    inner += svg_panel(rhd, "relative Hamming distance", 0, 290, 360, 280);
    inner += svg_panel(qubits, "qubits per mode", 370, 290, 360, 280);
    write_file(dir / "compare.svg", svg_document(inner, 740, 580, config));
  }
  return 0;
}

namespace {

void maybe_write_histograms(const std::filesystem::path& dir, const RunConfig& config,
                            const std::vector<std::pair<std::string, std::vector<double>>>& series,
                            const std::string& filename) {
  for (const auto& [name, values] : series) {
    if (static_cast<int>(values.size()) < config.bins) {
      std::cerr << "warning: fewer samples (" << values.size() << ") than bins ("
                << config.bins << "); skipping " << filename << "\n";
      return;
    }
  }
  std::vector<std::pair<std::string, Histogram>> hists;
  for (const auto& [name, values] : series) {
    hists.emplace_back(name, make_histogram(values, config.bins));
  }
  write_histogram_csv(dir / filename, config, hists);
}

}  // namespace

int cmd_vqe(const RunConfig& config) {
  const VqeRun run = run_vqe_samples(config);
  const auto dir = ensure_out_dir(config);

  nlohmann::ordered_json j;
  j["command"] = "vqe";
  j["config"] = config_json(config);
  j["config_hash"] = hash_hex(config);
  j["seed"] = config.seed;
  j["rng"] = Rng::kName;
  j["exact_levels"] =
      std::vector<double>(run.exact_levels.begin(),
                          run.exact_levels.begin() +
                              std::min<std::size_t>(run.exact_levels.size(), 8));
  j["exact_ground"] = run.exact_levels.front();
  nlohmann::ordered_json samples = nlohmann::ordered_json::array();
  for (const auto& s : run.samples) {
    nlohmann::ordered_json js;
    js["index"] = s.index;
    js["seed"] = s.seed;
    js["energy"] = s.energy;
    js["evaluations"] = s.evaluations;
    js["converged"] = s.converged;
    js["amplitudes"] = s.amplitudes;
    samples.push_back(js);
  }
  j["samples"] = samples;
  write_file(dir / "vqe_results.json", j.dump(2) + "\n");

  std::vector<double> energies;
  for (const auto& s : run.samples) energies.push_back(s.energy);
  maybe_write_histograms(dir, config, {{"0", energies}}, "vqe_hist.csv");
  write_cumulative_csv(dir / "vqe_cumulative.csv", config,
                       {{"0", cumulative_errors(energies, run.exact_levels.front())}});

  if (config.svg && static_cast<int>(energies.size()) >= config.bins) {
    const Histogram h = make_histogram(energies, config.bins);
    Series s{"samples", "#1f77b4", {}};
    const int bins = static_cast<int>(h.counts.size());
    for (int b = 0; b < bins; ++b) {
      s.points.emplace_back(h.lo + (h.hi - h.lo) * (b + 0.5) / bins,
                            static_cast<double>(h.counts[b]));
    }
    write_file(dir / "vqe_hist.svg",
               svg_document(svg_panel({s}, "VQE sample energies", 0, 0, 480, 320),
                            480, 320, config));
  }
  return 0;
}

int cmd_qeom(const RunConfig& config) {
  const QeomRun run = run_qeom_samples(config);
  const auto dir = ensure_out_dir(config);

  nlohmann::ordered_json j;
  j["command"] = "qeom";
  j["config"] = config_json(config);
  j["config_hash"] = hash_hex(config);
  j["seed"] = config.seed;
  j["rng"] = Rng::kName;
  j["exact_levels"] =
      std::vector<double>(run.exact_levels.begin(),
                          run.exact_levels.begin() +
                              std::min<std::size_t>(run.exact_levels.size(), 8));
  nlohmann::ordered_json samples = nlohmann::ordered_json::array();
  for (const auto& s : run.samples) {
    nlohmann::ordered_json js;
    js["index"] = s.index;
    js["seed"] = s.seed;
    js["converged"] = s.converged;
    js["regularized"] = s.regularized;
    js["totals"] = s.totals;
    samples.push_back(js);
  }
  j["samples"] = samples;
  write_file(dir / "qeom_results.json", j.dump(2) + "\n");

  std::vector<std::pair<std::string, std::vector<double>>> series;
  for (int state = 0; state < run.num_states; ++state) {
    std::vector<double> vals;
    for (const auto& s : run.samples) {
      if (state < static_cast<int>(s.totals.size())) vals.push_back(s.totals[state]);
    }
    if (!vals.empty()) series.emplace_back(std::to_string(state), vals);
  }
  maybe_write_histograms(dir, config, series, "qeom_hist.csv");

  std::vector<std::pair<std::string, std::vector<std::pair<double, double>>>> cums;
  for (const auto& [name, vals] : series) {
    const int state = std::stoi(name);
    if (state < static_cast<int>(run.exact_levels.size())) {
      cums.emplace_back(name, cumulative_errors(vals, run.exact_levels[state]));
    }
  }
  write_cumulative_csv(dir / "qeom_cumulative.csv", config, cums);
  return 0;
}

int cmd_fixtures(const RunConfig& config) {
  const auto dir = ensure_out_dir(config);
  for (const auto& name : fixtures::names()) {
    write_file(dir / (name + ".json"), fixtures::qff_json(name));
  }
  std::cout << "wrote " << fixtures::names().size() << " fixture files to "
            << dir.string() << "\n";
  return 0;
}

}  // namespace bosonenc
