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

#include <iostream>

#include <CLI11.hpp>

#include "bosonenc/report.hpp"

namespace {

void add_common_flags(CLI::App* cmd, bosonenc::RunConfig& config) {
  cmd->add_option("--seed", config.seed, "master seed");
  cmd->add_option("--out", config.out_dir, "output directory");
  cmd->add_flag("--svg,!--no-svg", config.svg, "also emit SVG plots");
}

std::string g_single_encoding = "cea";

void add_encoding_flags(CLI::App* cmd, bosonenc::RunConfig& config, bool multi) {
  if (multi) {
    cmd->add_option("--encoding", config.encodings,
                    "encodings to include: dm, sb, gc, cea")
        ->expected(-1);
  } else {
    cmd->add_option("--encoding", g_single_encoding,
                    "encoding: dm, sb, gc or cea");
  }
  cmd->add_option("--cea-threshold", config.cea_threshold,
                  "Hamming-weight cap for the compact encoding");
  cmd->add_flag("--gsep,!--no-gsep", config.gsep,
                "map the reference modal to the all-zero codeword");
}

void add_run_flags(CLI::App* cmd, bosonenc::RunConfig& config) {
  cmd->add_option("--qff", config.qff,
                  "force-field JSON file, or a fixture name (co2, symmetric2)")
      ->required();
  cmd->add_option("--modal-dim", config.modal_dim, "modals per mode");
  cmd->add_option("--p1", config.p1, "one-qubit depolarizing probability");
  cmd->add_option("--p2", config.p2, "two-qubit depolarizing probability");
  cmd->add_option("--samples", config.samples, "independent seeded runs");
  cmd->add_option("--shots", config.shots,
                  "shots per energy evaluation, or 'exact'");
  cmd->add_option("--bins", config.bins, "histogram bin count");
  cmd->add_option("--max-evals", config.max_evals, "optimizer evaluation budget");
  cmd->add_option("--rho-begin", config.rho_begin, "initial trust radius");
  cmd->add_option("--rho-end", config.rho_end, "final trust radius");
  cmd->add_option("--trotter-steps", config.trotter_steps, "Trotter steps");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"bosonic qubit encodings, UCCSD circuits, and VQE/QEOM runs"};
  app.require_subcommand(1);

  bosonenc::RunConfig config;

  auto* compare = app.add_subcommand(
      "compare", "encoding resource sweep over modal dimensions");
  add_encoding_flags(compare, config, true);
  compare->add_option("--modes", config.modes, "number of modes");
  compare->add_option("--nl-min", config.nl_min, "smallest modal dimension");
  compare->add_option("--nl-max", config.nl_max, "largest modal dimension");
  add_common_flags(compare, config);

  auto* vqe = app.add_subcommand("vqe", "sampled ground-state energies");
  add_encoding_flags(vqe, config, false);
  add_run_flags(vqe, config);
  add_common_flags(vqe, config);

  auto* qeom =
      app.add_subcommand("qeom", "sampled ground and excited state energies");
  add_encoding_flags(qeom, config, false);
  add_run_flags(qeom, config);
  add_common_flags(qeom, config);

  auto* fixtures =
      app.add_subcommand("fixtures", "write the bundled force-field files");
  add_common_flags(fixtures, config);

  CLI11_PARSE(app, argc, argv);

  try {
    if (compare->parsed()) {
      config.command = "compare";
      return bosonenc::cmd_compare(config);
    }
    if (vqe->parsed()) {
      config.command = "vqe";
      config.encodings = {g_single_encoding};
      return bosonenc::cmd_vqe(config);
    }
    if (qeom->parsed()) {
      config.command = "qeom";
      config.encodings = {g_single_encoding};
      return bosonenc::cmd_qeom(config);
    }
    if (fixtures->parsed()) {
      config.command = "fixtures";
      return bosonenc::cmd_fixtures(config);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
