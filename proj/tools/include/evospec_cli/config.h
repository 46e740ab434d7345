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

#ifndef EVOSPEC_CLI_CONFIG_H_
#define EVOSPEC_CLI_CONFIG_H_

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "evospec/grid.h"
#include "evospec/kernel.h"

namespace evospec::cli {

// Every field of a run. JSON keys are the member names; unknown keys are
// rejected.
struct RunConfig {
  std::string model = "example1";  // example1 | example2 | files
  std::string spectrum_file;
  std::string bispectrum_file;
  // Grid; zero means "model default" (files: taken from the header).
  std::int64_t N = 0;
  std::int64_t M = 0;
  double omega_u = 0.0;
  double T = 0.0;

  int order = 3;                   // 2 | 3
  std::string method = "direct";   // direct | pod
  std::size_t n_q = 10;
  std::size_t n_samples = 100;
  std::uint64_t seed = 1;
  unsigned threads = 1;            // 0: one per hardware thread
  std::string out_dir = "evospec_out";
  std::vector<std::string> formats = {"csv"};  // csv | raw
  bool stats = true;
  bool export_pod = false;

  double eps_denom = 1e-30;
  double feas_tol = 1e-9;

  std::vector<std::size_t> counts = {1, 10, 100};
  std::vector<int> bench_orders = {2, 3};
  std::size_t bench_repeats = 3;

  std::vector<std::size_t> nq_list = {1, 2, 4, 8, 16};
  std::vector<double> probe_times = {5.0, 10.0, 15.0};

  std::vector<std::string> parts = {"spectrum", "bispectrum"};

  KernelOptions kernel_options() const { return {eps_denom, feas_tol}; }
};

// Applies `j` on top of the defaults. Throws ConfigError naming the field.
// A missing "threads" falls back to EVOSPEC_THREADS, then to 1.
RunConfig config_from_json(const nlohmann::json& j);

// Resolves the grid for the built-in models and checks every field;
// throws ConfigError. Files-backed grids are checked once loaded.
void validate(RunConfig& cfg);

nlohmann::json to_json(const RunConfig& cfg);
nlohmann::json grid_json(const SimulationGrid& g);

}  // namespace evospec::cli

#endif  // EVOSPEC_CLI_CONFIG_H_
