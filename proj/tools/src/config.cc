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

#include "evospec_cli/config.h"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <set>

#include "evospec/errors.h"

namespace evospec::cli {
namespace {

using nlohmann::json;

const std::set<std::string>& known_keys() {
  static const std::set<std::string> keys = {
      "model",    "spectrum_file", "bispectrum_file", "N",
      "M",        "omega_u",       "T",               "order",
      "method",   "n_q",           "n_samples",       "seed",
      "threads",  "out_dir",       "formats",         "stats",
      "export_pod", "eps_denom",   "feas_tol",        "counts",
      "bench_orders", "bench_repeats", "nq_list",     "probe_times",
      "parts"};
  return keys;
}

template <class T>
void read(const json& j, const char* key, T& out) {
  auto it = j.find(key);
  if (it == j.end() || it->is_null()) return;
  try {
    if constexpr (std::is_unsigned_v<T> && !std::is_same_v<T, bool>) {
      if (it->is_number_integer() && it->template get<std::int64_t>() < 0) {
        throw ConfigError(key, "must be non-negative");
      }
      if (!it->is_number_integer() && !it->is_number_unsigned()) {
        throw ConfigError(key, "expected a non-negative integer");
      }
    } else if constexpr (std::is_integral_v<T> && !std::is_same_v<T, bool>) {
      if (!it->is_number_integer()) throw ConfigError(key, "expected an integer");
    } else if constexpr (std::is_floating_point_v<T>) {
      if (!it->is_number()) throw ConfigError(key, "expected a number");
    }
    out = it->template get<T>();
  } catch (const json::exception& e) {
    throw ConfigError(key, std::string("wrong type: ") + e.what());
  }
}

unsigned threads_from_env() {
  const char* env = std::getenv("EVOSPEC_THREADS");
  if (env == nullptr || *env == '\0') return 1;
  char* end = nullptr;
  const long v = std::strtol(env, &end, 10);
  if (*end != '\0' || v < 0 || v > 4096) {
    throw ConfigError("threads", "EVOSPEC_THREADS must be an integer in [0, 4096]");
  }
  return static_cast<unsigned>(v);
}

void check(bool ok, const char* field, const std::string& what) {
  if (!ok) throw ConfigError(field, what);
}

}  // namespace

RunConfig config_from_json(const json& j) {
  if (!j.is_object()) throw ConfigError("config", "expected a JSON object");
  for (auto it = j.begin(); it != j.end(); ++it) {
    if (!known_keys().count(it.key())) throw ConfigError(it.key(), "unknown field");
  }
  RunConfig c;
  read(j, "model", c.model);
  read(j, "spectrum_file", c.spectrum_file);
  read(j, "bispectrum_file", c.bispectrum_file);
  read(j, "N", c.N);
  read(j, "M", c.M);
  read(j, "omega_u", c.omega_u);
  read(j, "T", c.T);
  read(j, "order", c.order);
  read(j, "method", c.method);
  read(j, "n_q", c.n_q);
  read(j, "n_samples", c.n_samples);
  read(j, "seed", c.seed);
  c.threads = threads_from_env();
  read(j, "threads", c.threads);
  read(j, "out_dir", c.out_dir);
  read(j, "formats", c.formats);
  read(j, "stats", c.stats);
  read(j, "export_pod", c.export_pod);
  read(j, "eps_denom", c.eps_denom);
  read(j, "feas_tol", c.feas_tol);
  read(j, "counts", c.counts);
  read(j, "bench_orders", c.bench_orders);
  read(j, "bench_repeats", c.bench_repeats);
  read(j, "nq_list", c.nq_list);
  read(j, "probe_times", c.probe_times);
  read(j, "parts", c.parts);
  return c;
}

void validate(RunConfig& c) {
  check(c.model == "example1" || c.model == "example2" || c.model == "files",
        "model", "must be example1, example2 or files");
  if (c.model == "files") {
    check(!c.spectrum_file.empty(), "spectrum_file", "required for model files");
    check(!c.bispectrum_file.empty(), "bispectrum_file", "required for model files");
  } else {
    const bool ex1 = c.model == "example1";
    if (c.N == 0) c.N = ex1 ? 128 : 400;
    if (c.M == 0) c.M = ex1 ? 256 : 800;
    if (c.omega_u == 0.0) c.omega_u = ex1 ? 4.02 : 125.66;
    if (c.T == 0.0) c.T = ex1 ? 200.0 : 20.0;
    check(c.N >= 1, "N", "must be >= 1");
    check(c.M >= 1, "M", "must be >= 1");
    check(std::isfinite(c.omega_u) && c.omega_u > 0.0, "omega_u", "must be > 0");
    check(std::isfinite(c.T) && c.T > 0.0, "T", "must be > 0");
    check(!ex1 || c.T <= 200.0, "T", "example1 requires T <= 200");
    check(ex1 || c.T <= 20.0, "T", "example2 requires T <= 20");
  }
  check(c.order == 2 || c.order == 3, "order", "must be 2 or 3");
  check(c.method == "direct" || c.method == "pod", "method", "must be direct or pod");
  check(c.n_q >= 1, "n_q", "must be >= 1");
  if (c.N > 0) {
    check(c.n_q <= static_cast<std::size_t>(c.N), "n_q", "must not exceed N");
  }
  check(c.n_samples >= 1, "n_samples", "must be >= 1");
  check(c.threads <= 4096, "threads", "must be in [0, 4096]");
  check(!c.out_dir.empty(), "out_dir", "must not be empty");
  check(!c.formats.empty(), "formats", "must name at least one format");
  for (const auto& f : c.formats) {
    check(f == "csv" || f == "raw", "formats", "unknown format " + f);
  }
  check(std::isfinite(c.eps_denom) && c.eps_denom >= 0.0, "eps_denom", "must be >= 0");
  check(std::isfinite(c.feas_tol) && c.feas_tol >= 0.0, "feas_tol", "must be >= 0");
  check(!c.counts.empty(), "counts", "must not be empty");
  for (std::size_t i = 0; i < c.counts.size(); ++i) {
    check(c.counts[i] >= 1, "counts", "entries must be >= 1");
    check(i == 0 || c.counts[i] > c.counts[i - 1], "counts", "must be ascending");
  }
  check(!c.bench_orders.empty(), "bench_orders", "must not be empty");
  for (int o : c.bench_orders) check(o == 2 || o == 3, "bench_orders", "entries must be 2 or 3");
  check(c.bench_repeats >= 1, "bench_repeats", "must be >= 1");
  check(!c.nq_list.empty(), "nq_list", "must not be empty");
  for (std::size_t q : c.nq_list) {
    check(q >= 1 && (c.N == 0 || q <= static_cast<std::size_t>(c.N)), "nq_list",
          "entries must be in [1, N]");
  }
  check(!c.probe_times.empty(), "probe_times", "must not be empty");
  for (double t : c.probe_times) {
    check(std::isfinite(t) && t >= 0.0 && (c.T == 0.0 || t < c.T), "probe_times",
          "entries must be in [0, T)");
  }
  check(!c.parts.empty(), "parts", "must not be empty");
  for (const auto& p : c.parts) {
    check(p == "spectrum" || p == "bispectrum" || p == "kernel" || p == "pod",
          "parts", "unknown part " + p);
  }
}

json to_json(const RunConfig& c) {
  return json{{"model", c.model},
              {"spectrum_file", c.spectrum_file},
              {"bispectrum_file", c.bispectrum_file},
              {"N", c.N},
              {"M", c.M},
              {"omega_u", c.omega_u},
              {"T", c.T},
              {"order", c.order},
              {"method", c.method},
              {"n_q", c.n_q},
              {"n_samples", c.n_samples},
              {"seed", c.seed},
              {"threads", c.threads},
              {"out_dir", c.out_dir},
              {"formats", c.formats},
              {"stats", c.stats},
              {"export_pod", c.export_pod},
              {"eps_denom", c.eps_denom},
              {"feas_tol", c.feas_tol},
              {"counts", c.counts},
              {"bench_orders", c.bench_orders},
              {"bench_repeats", c.bench_repeats},
              {"nq_list", c.nq_list},
              {"probe_times", c.probe_times},
              {"parts", c.parts}};
}

json grid_json(const SimulationGrid& g) {
  return json{{"N", g.N},
              {"M", g.M},
              {"omega_u", g.omega_u},
              {"T", g.T},
              {"dw", g.dw},
              {"dt", g.dt},
              {"fft_compatible", g.fft_compatible},
              {"fft_mismatch", g.fft_mismatch}};
}

}  // namespace evospec::cli
