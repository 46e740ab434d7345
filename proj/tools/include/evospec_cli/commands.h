// Copyright 2026 The evospec Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef EVOSPEC_CLI_COMMANDS_H_
#define EVOSPEC_CLI_COMMANDS_H_

#include <exception>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "evospec/spectra.h"
#include "evospec_cli/config.h"

namespace evospec::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitFailure = 1,  // unexpected errors and verify mismatches
  kExitConfig = 2,   // config, input format and precondition errors
  kExitInfeasible = 3,
  kExitIo = 4,
};

int exit_code_for(const std::exception& e);

// Built-in model on the configured grid, or the file pair.
SpectralModel load_model(const RunConfig& cfg);

struct BenchRow {
  std::string method;  // direct | pod
  int order = 0;
  std::size_t n_samples = 0;
  double t_decompose = 0.0;
  double t_simulate = 0.0;
  double t_total = 0.0;
};

// Timed regions wrap compute only. Each cell is the repetition with the
// median total time (bench_repeats repetitions at counts <= 100).
std::vector<BenchRow> run_bench(const RunConfig& cfg, std::ostream& log);

// Each command writes its artifacts plus manifest.json into cfg.out_dir.
void cmd_simulate(const RunConfig& cfg, std::ostream& log);
void cmd_bench(const RunConfig& cfg, std::ostream& log);
void cmd_convergence(const RunConfig& cfg, std::ostream& log);
void cmd_export(const RunConfig& cfg, std::ostream& log);
// Re-runs the manifest in `dir` and compares artifacts byte for byte.
bool cmd_verify(const std::string& dir, std::ostream& log);

// Parses and validates `config`, dispatches, and maps errors to exit codes.
// For verify only "out_dir" is read.
int run_command(const std::string& command, const nlohmann::json& config,
                std::ostream& log);

}  // namespace evospec::cli

#endif  // EVOSPEC_CLI_COMMANDS_H_
